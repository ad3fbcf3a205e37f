#include "groupdepth/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "groupdepth/limits.hpp"

namespace groupdepth {

Permutation::Permutation(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image vector is not a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Permutation r;
  r.images_.resize(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Permutation &Permutation::operator*=(const Permutation &rhs) {
  *this = *this * rhs;
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::conjugated_by(const Permutation &g) const {
  if (degree() != g.degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  // (g^-1 * this * g)(g(x)) = g(this(x))
  Permutation r;
  r.images_.resize(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  }
  return ord;
}

std::vector<unsigned> Permutation::cycle_type() const {
  std::vector<unsigned> lens;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len >= 2)
      lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return lens;
}

int Permutation::sign() const {
  int s = 1;
  for (unsigned len : cycle_type())
    if (len % 2 == 0)
      s = -s;
  return s;
}

Permutation Permutation::extended(unsigned degree) const {
  if (degree < images_.size())
    throw std::invalid_argument("cannot shrink a permutation");
  Permutation r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

Permutation Permutation::parse_cycles(const std::string &text, unsigned degree) {
  if (degree > (1u << 16))
    throw ParseError("degree exceeds the representable maximum 65536");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});

  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.empty() || s == "()" || s == "id")
    return Permutation(degree);

  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(')
      throw ParseError("expected '(' in cycle notation: " + text);
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos)
      throw ParseError("unbalanced parenthesis in cycle notation: " + text);
    std::string body = s.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    if (body.empty())
      continue; // "()" inside a longer string
    std::vector<unsigned> cyc;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t idx = 0;
      unsigned long v;
      try {
        v = std::stoul(tok, &idx);
      } catch (const std::exception &) {
        throw ParseError("bad point '" + tok + "' in cycle notation");
      }
      if (idx != tok.size() || v == 0 || v > degree)
        throw ParseError("point '" + tok + "' out of range 1.." +
                         std::to_string(degree));
      unsigned p = static_cast<unsigned>(v - 1); // to 0-based
      if (used[p])
        throw ParseError("point " + tok + " repeated across cycles");
      used[p] = true;
      cyc.push_back(p);
    }
    if (cyc.size() < 2)
      continue; // singleton cycle is a fixed point
    for (std::size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i]] = static_cast<Point>(cyc[(i + 1) % cyc.size()]);
  }
  return Permutation(std::move(img));
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out += '(';
    bool first = true;
    for (unsigned j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first)
        out += ',';
      out += std::to_string(j + 1); // 1-based on the wire
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) {
  return os << p.cycle_string();
}

} // namespace groupdepth
