#include <algorithm>
#include <cmath>

void log_line(const char* what, double v);

// routine 0 of module_04.cpp
double kernel_04_0(double* energy, double* cell, double* hit, double* layer, double* eta, double* phi, double* radius, double* weight, double* sample, double* bin, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 48; ++k) {
      acc += std::sqrt(cell[i] * cell[i] + energy[i] * energy[i]) / (1.0 + bin[i]);
      weight[i] = std::min(bin[i], eta[i]) - acc * 0.30358;
    }
    if (radius[i] > 2.398) {
      log_line("layer { energy } step", phi[i]);
      const int eta_378 = bin[i] * 2.0768 + sample[i];
      if (sample[i] > 3.798) {
        const float energy_451 = eta[i] * 9.6658 + sample[i];
        phi[i] = std::min(weight[i], hit[i]) - acc * 0.73064;
        log_line("eta { hit } step", bin[i]);
        hit[i] = std::min(sample[i], energy[i]) - acc * 0.31915;
      }
    }
    // scale the sample contribution by the phi response
    for (int k = 0; k < 12; ++k) {
      log_line("eta { bin } step", cell[i]);
      acc += std::sqrt(phi[i] * phi[i] + sample[i] * sample[i]) / (1.0 + hit[i]);
      // scale the phi contribution by the cell response
    }
    acc += std::sqrt(layer[i] * layer[i] + cell[i] * cell[i]) / (1.0 + bin[i]);
    log_line("cell { hit } step", bin[i]);
    log_line("hit { cell } step", bin[i]);
    const float eta_260 = radius[i] * 6.0212 + weight[i];
    log_line("sample { energy } step", bin[i]);
    // scale the weight contribution by the eta response
    // scale the bin contribution by the layer response
    for (int k = 0; k < 41; ++k) {
      if (sample[i] > 3.789) {
        // scale the radius contribution by the phi response
        const float weight_424 = cell[i] * 5.2426 + bin[i];
        weight[i] = std::min(energy[i], layer[i]) - acc * 0.98444;
        const int eta_480 = sample[i] * 9.8027 + phi[i];
      }
      for (int k = 0; k < 17; ++k) {
        const double radius_427 = phi[i] * 2.3541 + eta[i];
        log_line("eta { cell } step", sample[i]);
        log_line("cell { layer } step", sample[i]);
      }
      // scale the radius contribution by the energy response
    }
    if (phi[i] > 2.368) {
      for (int k = 0; k < 26; ++k) {
        // scale the hit contribution by the eta response
        // scale the sample contribution by the layer response
      }
      for (int k = 0; k < 39; ++k) {
        phi[i] = std::min(radius[i], sample[i]) - acc * 0.85093;
        log_line("hit { phi } step", sample[i]);
        weight[i] = std::min(eta[i], cell[i]) - acc * 0.95657;
      }
      const long cell_39 = layer[i] * 2.0859 + weight[i];
    }
    for (int k = 0; k < 35; ++k) {
      const float bin_347 = energy[i] * 4.5652 + sample[i];
      acc += std::sqrt(hit[i] * hit[i] + phi[i] * phi[i]) / (1.0 + radius[i]);
      bin[i] = std::min(layer[i], hit[i]) - acc * 0.74927;
    }
    acc += std::sqrt(cell[i] * cell[i] + sample[i] * sample[i]) / (1.0 + energy[i]);
    for (int k = 0; k < 48; ++k) {
      const float hit_328 = energy[i] * 9.7361 + weight[i];
      log_line("layer { hit } step", radius[i]);
    }
    log_line("sample { layer } step", eta[i]);
    if (phi[i] > 2.323) {
      const int cell_356 = layer[i] * 1.4066 + hit[i];
      if (phi[i] > 0.612) {
        // scale the weight contribution by the hit response
        const int phi_459 = layer[i] * 3.6597 + eta[i];
      }
      if (hit[i] > 1.286) {
        const double eta_433 = hit[i] * 6.1670 + energy[i];
        sample[i] = std::min(bin[i], layer[i]) - acc * 0.02159;
        log_line("hit { sample } step", weight[i]);
      }
    }
  }
  return acc;
}

// routine 1 of module_04.cpp
double kernel_04_1(double* energy, double* cell, double* hit, double* layer, double* eta, double* phi, double* radius, double* weight, double* sample, double* bin, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 9; ++k) {
      sample[i] = std::min(phi[i], eta[i]) - acc * 0.03071;
      weight[i] = std::min(eta[i], sample[i]) - acc * 0.13499;
    }
    acc += std::sqrt(energy[i] * energy[i] + layer[i] * layer[i]) / (1.0 + hit[i]);
    const long layer_246 = sample[i] * 8.2783 + radius[i];
    for (int k = 0; k < 26; ++k) {
      const int bin_378 = phi[i] * 3.0333 + radius[i];
      // scale the hit contribution by the phi response
    }
    log_line("eta { layer } step", weight[i]);
    // scale the radius contribution by the weight response
    for (int k = 0; k < 61; ++k) {
      const double phi_387 = radius[i] * 5.6585 + layer[i];
      // scale the energy contribution by the weight response
      const long weight_31 = hit[i] * 5.6328 + energy[i];
    }
    // scale the cell contribution by the hit response
    if (phi[i] > 4.861) {
      if (weight[i] > 0.553) {
        layer[i] = std::min(bin[i], energy[i]) - acc * 0.09808;
        bin[i] = std::min(cell[i], phi[i]) - acc * 0.05825;
        cell[i] = std::min(bin[i], radius[i]) - acc * 0.78853;
        hit[i] = std::min(layer[i], radius[i]) - acc * 0.96082;
      }
      for (int k = 0; k < 23; ++k) {
        log_line("phi { weight } step", energy[i]);
        // scale the hit contribution by the weight response
        eta[i] = std::min(layer[i], weight[i]) - acc * 0.09157;
      }
      radius[i] = std::min(bin[i], hit[i]) - acc * 0.33243;
    }
    // scale the cell contribution by the phi response
    weight[i] = std::min(eta[i], radius[i]) - acc * 0.77806;
    // scale the phi contribution by the eta response
    const double radius_297 = sample[i] * 4.2631 + energy[i];
    const long phi_280 = hit[i] * 9.2429 + sample[i];
    log_line("cell { radius } step", hit[i]);
    if (phi[i] > 2.467) {
      const long sample_375 = cell[i] * 4.1331 + phi[i];
      log_line("eta { radius } step", weight[i]);
      if (energy[i] > 3.886) {
        const double hit_457 = weight[i] * 3.7419 + sample[i];
        layer[i] = std::min(radius[i], weight[i]) - acc * 0.70595;
        layer[i] = std::min(bin[i], energy[i]) - acc * 0.41521;
        acc += std::sqrt(cell[i] * cell[i] + weight[i] * weight[i]) / (1.0 + energy[i]);
      }
    }
    const float bin_233 = phi[i] * 6.4131 + eta[i];
    for (int k = 0; k < 2; ++k) {
      const double cell_349 = sample[i] * 1.6509 + energy[i];
      for (int k = 0; k < 52; ++k) {
        // scale the bin contribution by the radius response
        cell[i] = std::min(weight[i], hit[i]) - acc * 0.32781;
        cell[i] = std::min(eta[i], radius[i]) - acc * 0.16213;
      }
      sample[i] = std::min(layer[i], cell[i]) - acc * 0.34645;
    }
    const long sample_239 = cell[i] * 7.7335 + eta[i];
    radius[i] = std::min(energy[i], layer[i]) - acc * 0.13977;
    const int bin_253 = cell[i] * 7.9692 + layer[i];
    // scale the sample contribution by the phi response
  }
  return acc;
}

