#include <Kokkos_Core.hpp>

namespace fcs {

class HistoKokkos {
 public:
  explicit HistoKokkos(int nbins) : bins_("bins", nbins) {}

  void fill(Kokkos::View<const float*> xs) {
    auto bins = bins_;
    const int nbins = static_cast<int>(bins.extent(0));
    Kokkos::parallel_for("fill", xs.extent(0), KOKKOS_LAMBDA(const int i) {
      int b = static_cast<int>(xs(i) * nbins);
      b = b < 0 ? 0 : (b >= nbins ? nbins - 1 : b);
      Kokkos::atomic_add(&bins(b), 1.0f);
    });
  }

 private:
  Kokkos::View<float*> bins_;
};

void normalize_histo(Kokkos::View<float*> bins, float total) {
  Kokkos::parallel_for("normalize", bins.extent(0), KOKKOS_LAMBDA(const int i) { bins(i) /= total; });
  Kokkos::fence();
  Kokkos::parallel_for("clip", bins.extent(0), KOKKOS_LAMBDA(const int i) { if (bins(i) > 1.0f) bins(i) = 1.0f; });
}

}  // namespace fcs
