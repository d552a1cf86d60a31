#pragma once

#include <cstddef>

namespace sylowlens {

inline constexpr std::size_t kDefaultEnumerationCap = 20000;
inline constexpr std::size_t kDefaultLatticeCap = 400;

// Largest |G| for which element lists are materialized.
std::size_t enumeration_cap();
void set_enumeration_cap(std::size_t cap);

// Largest |G| for which the full subgroup lattice is built. Initialized from
// SYLOWLENS_LATTICE_CAP when that variable holds a positive integer.
std::size_t lattice_cap();
void set_lattice_cap(std::size_t cap);

// Restores a cap on scope exit; used by tests and the CLI.
class ScopedLatticeCap {
 public:
  explicit ScopedLatticeCap(std::size_t cap) : saved_(lattice_cap()) {
    set_lattice_cap(cap);
  }
  ~ScopedLatticeCap() { set_lattice_cap(saved_); }
  ScopedLatticeCap(const ScopedLatticeCap&) = delete;
  ScopedLatticeCap& operator=(const ScopedLatticeCap&) = delete;

 private:
  std::size_t saved_;
};

}  // namespace sylowlens
