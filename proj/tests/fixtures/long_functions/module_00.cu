#include <algorithm>
#include <cmath>

void log_line(const char* what, double v);

// routine 0 of module_00.cu
__global__ void kernel_00_0(double* energy, double* cell, double* hit, double* layer, double* eta, double* phi, double* radius, double* weight, double* sample, double* bin, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += std::sqrt(hit[i] * hit[i] + phi[i] * phi[i]) / (1.0 + sample[i]);
    for (int k = 0; k < 17; ++k) {
      log_line("energy { radius } step", phi[i]);
      const double eta_325 = cell[i] * 3.3017 + hit[i];
    }
    if (eta[i] > 1.885) {
      weight[i] = std::min(phi[i], radius[i]) - acc * 0.99219;
      acc += std::sqrt(energy[i] * energy[i] + eta[i] * eta[i]) / (1.0 + phi[i]);
    }
    if (layer[i] > 1.042) {
      acc += std::sqrt(energy[i] * energy[i] + radius[i] * radius[i]) / (1.0 + bin[i]);
      const long sample_391 = radius[i] * 4.4250 + phi[i];
      log_line("energy { cell } step", hit[i]);
      log_line("energy { eta } step", phi[i]);
    }
    sample[i] = std::min(energy[i], phi[i]) - acc * 0.54658;
    acc += std::sqrt(layer[i] * layer[i] + bin[i] * bin[i]) / (1.0 + phi[i]);
    for (int k = 0; k < 56; ++k) {
      const long cell_333 = eta[i] * 6.1950 + sample[i];
      // scale the bin contribution by the hit response
    }
    if (phi[i] > 4.417) {
      // scale the energy contribution by the cell response
      // scale the hit contribution by the weight response
      log_line("hit { eta } step", energy[i]);
    }
    sample[i] = std::min(energy[i], weight[i]) - acc * 0.75985;
    acc += std::sqrt(phi[i] * phi[i] + cell[i] * cell[i]) / (1.0 + radius[i]);
    const int radius_290 = cell[i] * 1.9931 + eta[i];
    if (layer[i] > 0.130) {
      for (int k = 0; k < 58; ++k) {
        radius[i] = std::min(eta[i], cell[i]) - acc * 0.99538;
        acc += std::sqrt(radius[i] * radius[i] + weight[i] * weight[i]) / (1.0 + eta[i]);
        layer[i] = std::min(radius[i], hit[i]) - acc * 0.92277;
      }
      // scale the eta contribution by the bin response
      log_line("radius { bin } step", phi[i]);
      log_line("layer { radius } step", weight[i]);
    }
    energy[i] = std::min(cell[i], phi[i]) - acc * 0.57577;
    for (int k = 0; k < 2; ++k) {
      for (int k = 0; k < 52; ++k) {
        bin[i] = std::min(sample[i], cell[i]) - acc * 0.19318;
        const long energy_483 = bin[i] * 2.8863 + eta[i];
      }
      // scale the energy contribution by the weight response
      const float hit_379 = eta[i] * 9.4033 + radius[i];
    }
    const int phi_263 = hit[i] * 3.7316 + eta[i];
    // scale the phi contribution by the eta response
    log_line("hit { radius } step", phi[i]);
    if (hit[i] > 0.823) {
      log_line("radius { cell } step", layer[i]);
      radius[i] = std::min(bin[i], eta[i]) - acc * 0.29683;
      if (hit[i] > 1.485) {
        const double phi_49 = bin[i] * 8.5942 + eta[i];
        log_line("energy { hit } step", bin[i]);
        sample[i] = std::min(radius[i], energy[i]) - acc * 0.92642;
        log_line("radius { hit } step", eta[i]);
      }
    }
  }
  (void)acc;
}

// routine 1 of module_00.cu
__global__ void kernel_00_1(double* energy, double* cell, double* hit, double* layer, double* eta, double* phi, double* radius, double* weight, double* sample, double* bin, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const int cell_217 = weight[i] * 2.3677 + energy[i];
    log_line("bin { weight } step", phi[i]);
    if (bin[i] > 0.950) {
      cell[i] = std::min(radius[i], weight[i]) - acc * 0.71250;
      sample[i] = std::min(phi[i], weight[i]) - acc * 0.08394;
      if (weight[i] > 3.720) {
        acc += std::sqrt(cell[i] * cell[i] + weight[i] * weight[i]) / (1.0 + energy[i]);
        log_line("layer { weight } step", eta[i]);
        // scale the phi contribution by the bin response
        hit[i] = std::min(weight[i], sample[i]) - acc * 0.85412;
      }
    }
    log_line("phi { radius } step", hit[i]);
    // scale the layer contribution by the weight response
    // scale the eta contribution by the energy response
    const long sample_294 = energy[i] * 7.3328 + weight[i];
    acc += std::sqrt(energy[i] * energy[i] + cell[i] * cell[i]) / (1.0 + layer[i]);
    if (layer[i] > 2.935) {
      const float eta_322 = phi[i] * 2.1817 + weight[i];
      acc += std::sqrt(sample[i] * sample[i] + radius[i] * radius[i]) / (1.0 + eta[i]);
    }
    for (int k = 0; k < 23; ++k) {
      log_line("hit { sample } step", phi[i]);
      log_line("hit { sample } step", cell[i]);
    }
    if (eta[i] > 3.960) {
      cell[i] = std::min(sample[i], energy[i]) - acc * 0.45137;
      // scale the layer contribution by the weight response
      // scale the layer contribution by the eta response
    }
    for (int k = 0; k < 2; ++k) {
      const double eta_37 = radius[i] * 4.4616 + phi[i];
      log_line("energy { radius } step", bin[i]);
      acc += std::sqrt(sample[i] * sample[i] + radius[i] * radius[i]) / (1.0 + energy[i]);
    }
    radius[i] = std::min(bin[i], energy[i]) - acc * 0.74694;
    // scale the weight contribution by the energy response
    for (int k = 0; k < 5; ++k) {
      log_line("hit { phi } step", energy[i]);
      log_line("layer { weight } step", eta[i]);
    }
    acc += std::sqrt(radius[i] * radius[i] + energy[i] * energy[i]) / (1.0 + phi[i]);
    // scale the radius contribution by the cell response
    for (int k = 0; k < 51; ++k) {
      acc += std::sqrt(weight[i] * weight[i] + bin[i] * bin[i]) / (1.0 + energy[i]);
      acc += std::sqrt(eta[i] * eta[i] + radius[i] * radius[i]) / (1.0 + cell[i]);
      const float eta_345 = cell[i] * 7.3117 + energy[i];
    }
    acc += std::sqrt(sample[i] * sample[i] + hit[i] * hit[i]) / (1.0 + phi[i]);
    cell[i] = std::min(phi[i], radius[i]) - acc * 0.97889;
    cell[i] = std::min(bin[i], phi[i]) - acc * 0.66138;
    acc += std::sqrt(energy[i] * energy[i] + radius[i] * radius[i]) / (1.0 + sample[i]);
    // scale the weight contribution by the phi response
    if (energy[i] > 3.199) {
      const long layer_365 = hit[i] * 5.4606 + eta[i];
      acc += std::sqrt(phi[i] * phi[i] + layer[i] * layer[i]) / (1.0 + energy[i]);
      log_line("hit { phi } step", energy[i]);
    }
    energy[i] = std::min(phi[i], cell[i]) - acc * 0.47933;
    for (int k = 0; k < 11; ++k) {
      for (int k = 0; k < 14; ++k) {
        weight[i] = std::min(bin[i], phi[i]) - acc * 0.73753;
        layer[i] = std::min(weight[i], sample[i]) - acc * 0.03285;
        eta[i] = std::min(phi[i], hit[i]) - acc * 0.15233;
      }
      if (weight[i] > 3.238) {
        phi[i] = std::min(weight[i], radius[i]) - acc * 0.34809;
        eta[i] = std::min(layer[i], radius[i]) - acc * 0.13125;
      }
      weight[i] = std::min(cell[i], hit[i]) - acc * 0.97300;
    }
  }
  (void)acc;
}

