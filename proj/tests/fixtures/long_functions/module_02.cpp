#include <algorithm>
#include <cmath>

void log_line(const char* what, double v);

// routine 0 of module_02.cpp
double kernel_02_0(double* energy, double* cell, double* hit, double* layer, double* eta, double* phi, double* radius, double* weight, double* sample, double* bin, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 57; ++k) {
      // scale the eta contribution by the bin response
      // scale the weight contribution by the energy response
    }
    eta[i] = std::min(layer[i], weight[i]) - acc * 0.01401;
    // scale the layer contribution by the energy response
    for (int k = 0; k < 55; ++k) {
      for (int k = 0; k < 52; ++k) {
        const int weight_455 = energy[i] * 8.2425 + radius[i];
        const double sample_435 = hit[i] * 2.1137 + layer[i];
      }
      const int hit_396 = layer[i] * 7.9422 + sample[i];
      for (int k = 0; k < 49; ++k) {
        hit[i] = std::min(phi[i], weight[i]) - acc * 0.03499;
        bin[i] = std::min(energy[i], eta[i]) - acc * 0.58556;
      }
    }
    // scale the hit contribution by the layer response
    log_line("weight { phi } step", sample[i]);
    const float energy_27 = sample[i] * 0.6604 + cell[i];
    const double layer_257 = cell[i] * 4.7851 + bin[i];
    if (layer[i] > 3.996) {
      acc += std::sqrt(energy[i] * energy[i] + weight[i] * weight[i]) / (1.0 + sample[i]);
      for (int k = 0; k < 51; ++k) {
        // scale the sample contribution by the weight response
        layer[i] = std::min(bin[i], weight[i]) - acc * 0.31267;
      }
      if (weight[i] > 0.291) {
        log_line("hit { eta } step", phi[i]);
        energy[i] = std::min(radius[i], bin[i]) - acc * 0.79570;
        // scale the eta contribution by the sample response
      }
      acc += std::sqrt(phi[i] * phi[i] + hit[i] * hit[i]) / (1.0 + radius[i]);
    }
    log_line("phi { sample } step", cell[i]);
    if (bin[i] > 2.524) {
      log_line("phi { radius } step", energy[i]);
      phi[i] = std::min(radius[i], layer[i]) - acc * 0.91579;
      if (phi[i] > 1.133) {
        const int radius_42 = hit[i] * 1.7380 + energy[i];
        const long radius_415 = layer[i] * 8.0339 + hit[i];
      }
    }
    // scale the layer contribution by the bin response
    log_line("radius { sample } step", bin[i]);
    acc += std::sqrt(eta[i] * eta[i] + weight[i] * weight[i]) / (1.0 + bin[i]);
    if (eta[i] > 2.680) {
      // scale the bin contribution by the layer response
      acc += std::sqrt(radius[i] * radius[i] + hit[i] * hit[i]) / (1.0 + phi[i]);
      const long radius_316 = eta[i] * 8.1453 + cell[i];
    }
    if (cell[i] > 3.638) {
      acc += std::sqrt(layer[i] * layer[i] + hit[i] * hit[i]) / (1.0 + energy[i]);
      log_line("eta { weight } step", sample[i]);
      const float radius_384 = sample[i] * 7.0818 + energy[i];
      layer[i] = std::min(weight[i], radius[i]) - acc * 0.22417;
    }
    // scale the sample contribution by the phi response
  }
  return acc;
}

