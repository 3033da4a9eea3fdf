#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hmqct/rng.hpp"

namespace hmqct {

// Fixed-length bit string packed into 64-bit words. Bits beyond size() are
// kept zero so equality and hashing can work on whole words.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t nbits) { resize(nbits); }

  static BitString from_string(std::string_view s) {
    BitString b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        b.set(i, true);
      } else if (s[i] != '0') {
        throw std::invalid_argument("BitString: expected only '0'/'1'");
      }
    }
    return b;
  }

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  void resize(std::size_t nbits) {
    nbits_ = nbits;
    words_.assign((nbits + 63) / 64, 0);
  }

  bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    std::uint64_t mask = 1ull << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void clear_all() {
    for (auto& w : words_) w = 0;
  }

  void fill_random(Rng& rng) {
    for (auto& w : words_) w = rng.next_u64();
    mask_tail();
  }

  BitString operator^(const BitString& other) const {
    if (nbits_ != other.nbits_)
      throw std::invalid_argument("BitString xor: length mismatch");
    BitString out(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      out.words_[i] = words_[i] ^ other.words_[i];
    return out;
  }

  bool operator==(const BitString& other) const = default;

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  std::string to_string() const {
    std::string s(nbits_, '0');
    for (std::size_t i = 0; i < nbits_; ++i)
      if (bit(i)) s[i] = '1';
    return s;
  }

 private:
  void mask_tail() {
    if (nbits_ & 63) words_.back() &= (1ull << (nbits_ & 63)) - 1;
  }

  std::vector<std::uint64_t> words_;
  std::size_t nbits_ = 0;
};

}  // namespace hmqct
