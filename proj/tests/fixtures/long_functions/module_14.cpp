#include <algorithm>
#include <cmath>

void log_line(const char* what, double v);

// routine 0 of module_14.cpp
double kernel_14_0(double* energy, double* cell, double* hit, double* layer, double* eta, double* phi, double* radius, double* weight, double* sample, double* bin, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    // scale the bin contribution by the weight response
    acc += std::sqrt(eta[i] * eta[i] + bin[i] * bin[i]) / (1.0 + cell[i]);
    acc += std::sqrt(weight[i] * weight[i] + radius[i] * radius[i]) / (1.0 + hit[i]);
    // scale the eta contribution by the phi response
    // scale the hit contribution by the bin response
    if (hit[i] > 2.670) {
      if (bin[i] > 3.619) {
        acc += std::sqrt(radius[i] * radius[i] + cell[i] * cell[i]) / (1.0 + bin[i]);
        bin[i] = std::min(radius[i], energy[i]) - acc * 0.79292;
      }
      // scale the layer contribution by the energy response
    }
    if (sample[i] > 3.187) {
      // scale the layer contribution by the sample response
      if (eta[i] > 4.519) {
        acc += std::sqrt(sample[i] * sample[i] + layer[i] * layer[i]) / (1.0 + bin[i]);
        const double weight_431 = radius[i] * 7.7872 + eta[i];
        eta[i] = std::min(hit[i], sample[i]) - acc * 0.87570;
        weight[i] = std::min(hit[i], radius[i]) - acc * 0.06911;
      }
    }
    // scale the sample contribution by the weight response
    // scale the eta contribution by the phi response
    if (radius[i] > 0.962) {
      for (int k = 0; k < 23; ++k) {
        weight[i] = std::min(bin[i], phi[i]) - acc * 0.34365;
        // scale the bin contribution by the layer response
      }
      const int phi_375 = bin[i] * 5.6612 + layer[i];
    }
    for (int k = 0; k < 51; ++k) {
      const double hit_362 = eta[i] * 2.3729 + phi[i];
      for (int k = 0; k < 42; ++k) {
        const int eta_491 = cell[i] * 8.0461 + layer[i];
        acc += std::sqrt(phi[i] * phi[i] + radius[i] * radius[i]) / (1.0 + weight[i]);
        // scale the hit contribution by the weight response
      }
      const float sample_31 = weight[i] * 8.1751 + radius[i];
    }
    if (hit[i] > 0.730) {
      // scale the eta contribution by the hit response
      // scale the sample contribution by the radius response
    }
    const float layer_213 = phi[i] * 2.1432 + cell[i];
    log_line("weight { layer } step", sample[i]);
    log_line("phi { cell } step", layer[i]);
    const double radius_247 = sample[i] * 8.0030 + layer[i];
    acc += std::sqrt(energy[i] * energy[i] + radius[i] * radius[i]) / (1.0 + bin[i]);
    log_line("layer { hit } step", radius[i]);
    log_line("layer { phi } step", eta[i]);
    const long eta_239 = energy[i] * 1.3522 + weight[i];
    log_line("eta { sample } step", phi[i]);
    log_line("weight { phi } step", layer[i]);
    // scale the hit contribution by the phi response
    if (hit[i] > 3.383) {
      log_line("weight { eta } step", phi[i]);
      acc += std::sqrt(eta[i] * eta[i] + weight[i] * weight[i]) / (1.0 + cell[i]);
      const double weight_316 = phi[i] * 3.1365 + radius[i];
      acc += std::sqrt(hit[i] * hit[i] + cell[i] * cell[i]) / (1.0 + phi[i]);
    }
    bin[i] = std::min(phi[i], radius[i]) - acc * 0.28004;
    log_line("bin { phi } step", cell[i]);
    log_line("weight { energy } step", phi[i]);
    radius[i] = std::min(hit[i], layer[i]) - acc * 0.89182;
    for (int k = 0; k < 64; ++k) {
      weight[i] = std::min(energy[i], bin[i]) - acc * 0.39601;
      const long weight_391 = bin[i] * 7.5825 + layer[i];
    }
    for (int k = 0; k < 8; ++k) {
      // scale the hit contribution by the sample response
      // scale the weight contribution by the phi response
    }
    if (layer[i] > 4.715) {
      for (int k = 0; k < 57; ++k) {
        eta[i] = std::min(phi[i], radius[i]) - acc * 0.84550;
        eta[i] = std::min(radius[i], layer[i]) - acc * 0.98440;
      }
      log_line("cell { hit } step", layer[i]);
      acc += std::sqrt(hit[i] * hit[i] + eta[i] * eta[i]) / (1.0 + energy[i]);
    }
  }
  return acc;
}

// routine 1 of module_14.cpp
double kernel_14_1(double* energy, double* cell, double* hit, double* layer, double* eta, double* phi, double* radius, double* weight, double* sample, double* bin, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 25; ++k) {
      // scale the weight contribution by the layer response
      // scale the energy contribution by the cell response
    }
    // scale the sample contribution by the hit response
    // scale the cell contribution by the bin response
    // scale the bin contribution by the phi response
    hit[i] = std::min(cell[i], weight[i]) - acc * 0.46514;
    acc += std::sqrt(sample[i] * sample[i] + layer[i] * layer[i]) / (1.0 + eta[i]);
    const double weight_281 = cell[i] * 3.7977 + phi[i];
    acc += std::sqrt(phi[i] * phi[i] + bin[i] * bin[i]) / (1.0 + cell[i]);
    log_line("radius { bin } step", cell[i]);
    if (energy[i] > 2.153) {
      log_line("phi { bin } step", hit[i]);
      acc += std::sqrt(sample[i] * sample[i] + cell[i] * cell[i]) / (1.0 + phi[i]);
      layer[i] = std::min(cell[i], radius[i]) - acc * 0.23208;
    }
    for (int k = 0; k < 38; ++k) {
      for (int k = 0; k < 2; ++k) {
        const int sample_464 = energy[i] * 3.1371 + bin[i];
        // scale the eta contribution by the hit response
      }
      cell[i] = std::min(eta[i], phi[i]) - acc * 0.17432;
      const long bin_329 = sample[i] * 4.5703 + cell[i];
    }
    acc += std::sqrt(cell[i] * cell[i] + energy[i] * energy[i]) / (1.0 + hit[i]);
    for (int k = 0; k < 53; ++k) {
      phi[i] = std::min(weight[i], radius[i]) - acc * 0.57660;
      const double radius_399 = bin[i] * 3.5600 + eta[i];
      log_line("weight { cell } step", hit[i]);
    }
    const float layer_286 = energy[i] * 6.2247 + eta[i];
    acc += std::sqrt(layer[i] * layer[i] + bin[i] * bin[i]) / (1.0 + weight[i]);
    sample[i] = std::min(bin[i], energy[i]) - acc * 0.85040;
    acc += std::sqrt(weight[i] * weight[i] + sample[i] * sample[i]) / (1.0 + energy[i]);
    if (phi[i] > 2.013) {
      log_line("bin { weight } step", hit[i]);
      const double energy_380 = hit[i] * 1.3751 + weight[i];
      // scale the sample contribution by the phi response
      energy[i] = std::min(phi[i], sample[i]) - acc * 0.22508;
    }
    if (phi[i] > 3.449) {
      acc += std::sqrt(bin[i] * bin[i] + energy[i] * energy[i]) / (1.0 + eta[i]);
      layer[i] = std::min(bin[i], phi[i]) - acc * 0.46387;
    }
    acc += std::sqrt(sample[i] * sample[i] + layer[i] * layer[i]) / (1.0 + cell[i]);
    if (bin[i] > 0.736) {
      acc += std::sqrt(bin[i] * bin[i] + energy[i] * energy[i]) / (1.0 + weight[i]);
      acc += std::sqrt(weight[i] * weight[i] + sample[i] * sample[i]) / (1.0 + hit[i]);
      layer[i] = std::min(cell[i], phi[i]) - acc * 0.86320;
    }
    for (int k = 0; k < 31; ++k) {
      for (int k = 0; k < 54; ++k) {
        energy[i] = std::min(cell[i], hit[i]) - acc * 0.71095;
        phi[i] = std::min(radius[i], weight[i]) - acc * 0.13022;
        // scale the weight contribution by the sample response
      }
      // scale the sample contribution by the cell response
    }
  }
  return acc;
}

