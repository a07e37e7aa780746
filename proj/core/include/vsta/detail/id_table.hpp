#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace vsta::detail {

/// Open-addressing set of dense ids whose keys live elsewhere. Callers
/// supply the hash of the key being looked up and an equality test on ids.
/// Each slot keeps 32 bits of the hash, so probes rarely touch the keys and
/// growing never does.
class IdTable {
 public:
  template <class Eq>
  std::optional<std::uint32_t> find(std::size_t hash, Eq&& eq) const {
    if (slots_.empty()) return std::nullopt;
    const std::uint32_t tag = mix(hash);
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = tag & mask;; i = (i + 1) & mask) {
      const Slot& s = slots_[i];
      if (s.id == kEmpty) return std::nullopt;
      if (s.tag == tag && eq(s.id)) return s.id;
    }
  }

  /// Inserts an id known to be absent.
  void insert(std::size_t hash, std::uint32_t id) {
    if ((size_ + 1) * 4 > slots_.size() * 3) grow();
    place(Slot{id, mix(hash)});
    ++size_;
  }

  std::size_t size() const { return size_; }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  struct Slot {
    std::uint32_t id = kEmpty;
    std::uint32_t tag = 0;
  };

  // Spreads weak hashes over the low bits used for probing.
  static std::uint32_t mix(std::size_t h) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::uint32_t>(h);
  }

  void place(Slot s) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = s.tag & mask;
    while (slots_[i].id != kEmpty) i = (i + 1) & mask;
    slots_[i] = s;
  }

  void grow() {
    std::vector<Slot> old(slots_.empty() ? 16 : slots_.size() * 2);
    old.swap(slots_);
    for (const Slot& s : old) {
      if (s.id != kEmpty) place(s);
    }
  }

  std::vector<Slot> slots_;
  std::size_t size_ = 0;
};

}  // namespace vsta::detail
