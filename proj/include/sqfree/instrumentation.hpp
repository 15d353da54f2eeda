#ifndef SQFREE_INSTRUMENTATION_HPP
#define SQFREE_INSTRUMENTATION_HPP

#include <algorithm>
#include <cstddef>
#include <span>

namespace sqfree::instrumentation {

/// Records the largest coefficient bit size of every polynomial built on
/// the current thread while the probe is alive. Probes nest; the innermost
/// one receives observations.
class BitSizeProbe {
 public:
  BitSizeProbe() : previous_(active_) { active_ = this; }
  ~BitSizeProbe() { active_ = previous_; }
  BitSizeProbe(const BitSizeProbe&) = delete;
  BitSizeProbe& operator=(const BitSizeProbe&) = delete;

  std::size_t max_bits() const { return max_bits_; }

  static BitSizeProbe* active() { return active_; }

  void record(std::size_t bits) { max_bits_ = std::max(max_bits_, bits); }

 private:
  static inline thread_local BitSizeProbe* active_ = nullptr;
  BitSizeProbe* previous_;
  std::size_t max_bits_ = 0;
};

template <typename Scalar>
void observe(std::span<const Scalar> coefficients) {
  if constexpr (requires(const Scalar& c) { bit_size(c); }) {
    auto* probe = BitSizeProbe::active();
    if (probe == nullptr) return;
    for (const auto& c : coefficients) probe->record(bit_size(c));
  }
}

}  // namespace sqfree::instrumentation

#endif  // SQFREE_INSTRUMENTATION_HPP
