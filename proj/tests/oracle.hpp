#pragma once

// Brute-force reference implementations for the tests. Works on plain
// U/D/F strings and never calls into the library.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

inline bool is_motzkin(const std::string& s) {
  int level = 0;
  for (char c : s) {
    level += c == 'U' ? 1 : c == 'D' ? -1 : 0;
    if (level < 0)
      return false;
  }
  return level == 0;
}

inline bool is_dyck(const std::string& s) {
  return s.find('F') == std::string::npos && is_motzkin(s);
}

// Every string over `alphabet` of length `len` satisfying `keep`, in the
// order induced by the alphabet's character order.
template <typename Keep>
std::vector<std::string> all_strings(const std::string& alphabet, std::size_t len, Keep keep) {
  std::vector<std::string> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i)
    total *= alphabet.size();
  std::string s(len, alphabet[0]);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (std::size_t i = len; i-- > 0;) {
      s[i] = alphabet[x % alphabet.size()];
      x /= alphabet.size();
    }
    if (keep(s))
      out.push_back(s);
  }
  return out;
}

inline std::vector<std::string> dyck_paths(std::size_t semilength) {
  return all_strings("UD", 2 * semilength, is_dyck);
}

inline std::vector<std::string> motzkin_paths(std::size_t length) {
  return all_strings("UFD", length, is_motzkin);
}

inline std::vector<int> peak_heights(const std::string& s) {
  if (s.empty())
    return {0};
  std::vector<int> out;
  int level = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    level += s[i] == 'U' ? 1 : -1;
    if (s[i] == 'U' && i + 1 < s.size() && s[i + 1] == 'D')
      out.push_back(level);
  }
  return out;
}

// 'O' all odd, 'E' all even, 'M' mixed.
inline char parity_class(const std::string& s) {
  bool odd = false, even = false;
  for (int h : peak_heights(s))
    (h % 2 ? odd : even) = true;
  return odd && even ? 'M' : odd ? 'O' : 'E';
}

inline bool has_ground_flat(const std::string& s) {
  int level = 0;
  for (char c : s) {
    if (c == 'F' && level == 0)
      return true;
    level += c == 'U' ? 1 : c == 'D' ? -1 : 0;
  }
  return false;
}

} // namespace oracle
