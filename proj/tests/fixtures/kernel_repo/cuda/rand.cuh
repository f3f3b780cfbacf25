#pragma once

#include <curand_kernel.h>

__device__ inline double uniform01(curandState* state) { return curand_uniform_double(state); }

template <typename State>
__global__ void init_state(State* states, unsigned long long seed, int n) {
  const int i = blockIdx.x * blockDim.x + threadIdx.x;
  if (i < n) curand_init(seed, i, 0, &states[i]);
}

__host__ void seed_generators(curandState* states, unsigned long long seed, int n);
