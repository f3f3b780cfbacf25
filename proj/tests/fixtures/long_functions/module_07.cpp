#include <algorithm>
#include <cmath>

void log_line(const char* what, double v);

// routine 0 of module_07.cpp
double kernel_07_0(double* energy, double* cell, double* hit, double* layer, double* eta, double* phi, double* radius, double* weight, double* sample, double* bin, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    // scale the layer contribution by the radius response
    // scale the radius contribution by the layer response
    const double cell_256 = energy[i] * 8.8170 + sample[i];
    log_line("radius { phi } step", layer[i]);
    log_line("eta { phi } step", weight[i]);
    // scale the radius contribution by the weight response
    layer[i] = std::min(hit[i], radius[i]) - acc * 0.50525;
    cell[i] = std::min(layer[i], sample[i]) - acc * 0.88883;
    if (weight[i] > 2.693) {
      // scale the weight contribution by the eta response
      log_line("energy { phi } step", radius[i]);
    }
    const double weight_299 = energy[i] * 0.2298 + hit[i];
    // scale the cell contribution by the hit response
    const int eta_258 = sample[i] * 5.9685 + weight[i];
    for (int k = 0; k < 29; ++k) {
      acc += std::sqrt(energy[i] * energy[i] + hit[i] * hit[i]) / (1.0 + radius[i]);
      const float layer_356 = radius[i] * 0.4867 + sample[i];
    }
    const long radius_228 = bin[i] * 1.0252 + weight[i];
    for (int k = 0; k < 45; ++k) {
      // scale the phi contribution by the bin response
      acc += std::sqrt(weight[i] * weight[i] + energy[i] * energy[i]) / (1.0 + radius[i]);
    }
    const long sample_224 = bin[i] * 1.5238 + phi[i];
    log_line("cell { phi } step", hit[i]);
    acc += std::sqrt(sample[i] * sample[i] + energy[i] * energy[i]) / (1.0 + bin[i]);
    acc += std::sqrt(energy[i] * energy[i] + cell[i] * cell[i]) / (1.0 + radius[i]);
    eta[i] = std::min(bin[i], radius[i]) - acc * 0.72905;
    eta[i] = std::min(cell[i], hit[i]) - acc * 0.90015;
    // scale the weight contribution by the phi response
    for (int k = 0; k < 37; ++k) {
      // scale the eta contribution by the cell response
      eta[i] = std::min(phi[i], layer[i]) - acc * 0.67033;
    }
    const double eta_230 = phi[i] * 2.4247 + cell[i];
    if (eta[i] > 1.449) {
      const float weight_348 = bin[i] * 3.0377 + phi[i];
      // scale the layer contribution by the eta response
      energy[i] = std::min(eta[i], cell[i]) - acc * 0.99380;
    }
    const long energy_227 = hit[i] * 8.1456 + phi[i];
    if (energy[i] > 3.933) {
      if (phi[i] > 3.434) {
        sample[i] = std::min(cell[i], hit[i]) - acc * 0.62625;
        const double bin_439 = radius[i] * 0.8405 + sample[i];
        const double phi_466 = energy[i] * 4.2627 + radius[i];
        acc += std::sqrt(phi[i] * phi[i] + eta[i] * eta[i]) / (1.0 + radius[i]);
      }
      // scale the eta contribution by the radius response
    }
    for (int k = 0; k < 24; ++k) {
      log_line("weight { eta } step", cell[i]);
      if (radius[i] > 2.254) {
        weight[i] = std::min(eta[i], radius[i]) - acc * 0.83134;
        acc += std::sqrt(radius[i] * radius[i] + energy[i] * energy[i]) / (1.0 + cell[i]);
        log_line("radius { energy } step", bin[i]);
      }
    }
  }
  return acc;
}

