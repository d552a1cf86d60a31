#include "sylowlens/config.hpp"
#include "sylowlens/error.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace sylowlens {

namespace {

std::size_t initial_lattice_cap() {
  const char* env = std::getenv("SYLOWLENS_LATTICE_CAP");
  if (env == nullptr) return kDefaultLatticeCap;
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return kDefaultLatticeCap;
  return value;
}

std::atomic<std::size_t>& lattice_cap_slot() {
  static std::atomic<std::size_t> cap{initial_lattice_cap()};
  return cap;
}

std::atomic<std::size_t> g_enumeration_cap{kDefaultEnumerationCap};

}  // namespace

std::size_t enumeration_cap() { return g_enumeration_cap.load(); }
void set_enumeration_cap(std::size_t cap) { g_enumeration_cap.store(cap); }

std::size_t lattice_cap() { return lattice_cap_slot().load(); }
void set_lattice_cap(std::size_t cap) { lattice_cap_slot().store(cap); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeMismatch: return "degree mismatch";
    case ErrorKind::InvalidPermutation: return "invalid permutation";
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::AmbientMismatch: return "ambient mismatch";
    case ErrorKind::NotSubgroup: return "not a subgroup";
    case ErrorKind::NotNormal: return "not normal";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Unsupported: return "unsupported";
  }
  return "unknown";
}

}  // namespace sylowlens
