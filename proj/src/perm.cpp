#include "covnum/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace covnum {

std::string CycleType::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

Perm Perm::identity(int n) {
  if (n < 1 || n > kMaxPoints) throw std::invalid_argument("Perm: bad degree");
  Perm p;
  p.n_ = uint8_t(n);
  for (int i = 0; i < kMaxPoints; ++i) p.img_[i] = uint8_t(i + 1);
  return p;
}

Perm Perm::from_images(std::span<const int> images) {
  int n = int(images.size());
  Perm p = identity(n);
  uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || v > n || (seen >> v) & 1)
      throw std::invalid_argument("Perm: images not a bijection");
    seen |= uint32_t(1) << v;
    p.img_[i] = uint8_t(v);
  }
  return p;
}

Perm Perm::from_cycles(int n, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  Perm p = identity(n);
  if (s.empty() || s == "id" || s == "()" || s == "1") return p;
  std::size_t pos = 0;
  uint32_t used = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw std::invalid_argument("Perm: expected '('");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("Perm: unbalanced cycle");
    std::string body = s.substr(pos + 1, close - pos - 1);
    std::vector<int> cyc;
    if (body.find(',') != std::string::npos) {
      std::istringstream is(body);
      std::string tok;
      while (std::getline(is, tok, ',')) cyc.push_back(std::stoi(tok));
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("Perm: bad cycle character");
        cyc.push_back(c - '0');
      }
    }
    if (cyc.size() < 2) throw std::invalid_argument("Perm: cycle too short");
    for (int v : cyc) {
      if (v < 1 || v > n) throw std::invalid_argument("Perm: point out of range");
      if ((used >> v) & 1) throw std::invalid_argument("Perm: cycles not disjoint");
      used |= uint32_t(1) << v;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      p.img_[cyc[i] - 1] = uint8_t(cyc[(i + 1) % cyc.size()]);
    pos = close + 1;
  }
  return p;
}

Perm Perm::compose(const Perm& q) const {
  if (n_ != q.n_) throw std::invalid_argument("Perm: degree mismatch in compose");
  Perm r = identity(n_);
  for (int i = 0; i < n_; ++i) r.img_[i] = q.img_[img_[i] - 1];
  return r;
}

Perm Perm::inverse() const {
  Perm r = identity(n_);
  for (int i = 0; i < n_; ++i) r.img_[img_[i] - 1] = uint8_t(i + 1);
  return r;
}

Perm Perm::conjugate(const Perm& g) const {
  return g.inverse().compose(*this).compose(g);
}

Perm Perm::power(long e) const {
  int ord = order();
  e %= ord;
  if (e < 0) e += ord;
  Perm acc = identity(n_);
  Perm base = *this;
  while (e > 0) {
    if (e & 1) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

bool Perm::even() const {
  uint32_t seen = 0;
  int cycles = 0;
  for (int i = 0; i < n_; ++i) {
    if ((seen >> i) & 1) continue;
    ++cycles;
    int j = i;
    while (!((seen >> j) & 1)) {
      seen |= uint32_t(1) << j;
      j = img_[j] - 1;
    }
  }
  return ((n_ - cycles) & 1) == 0;
}

CycleType Perm::cycle_type() const {
  uint32_t seen = 0;
  CycleType t;
  for (int i = 0; i < n_; ++i) {
    if ((seen >> i) & 1) continue;
    int len = 0, j = i;
    while (!((seen >> j) & 1)) {
      seen |= uint32_t(1) << j;
      j = img_[j] - 1;
      ++len;
    }
    t.parts.push_back(len);
  }
  std::sort(t.parts.begin(), t.parts.end(), std::greater<int>());
  return t;
}

int Perm::order() const {
  long o = 1;
  for (int len : cycle_type().parts) o = std::lcm(o, long(len));
  return int(o);
}

std::string Perm::cycles() const {
  uint32_t seen = 0;
  std::ostringstream os;
  bool wide = n_ > 9;
  bool any = false;
  for (int i = 0; i < n_; ++i) {
    if ((seen >> i) & 1) continue;
    std::vector<int> cyc;
    int j = i;
    while (!((seen >> j) & 1)) {
      seen |= uint32_t(1) << j;
      cyc.push_back(j + 1);
      j = img_[j] - 1;
    }
    if (cyc.size() < 2) continue;
    any = true;
    os << "(";
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k && wide) os << ",";
      os << cyc[k];
    }
    os << ")";
  }
  return any ? os.str() : "id";
}

uint64_t Perm::key() const {
  uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k = (k << 4) | uint64_t(img_[i] - 1);
  return k;
}

long Perm::lex_rank() const {
  long rank = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j)
      if (img_[j] < img_[i]) ++smaller;
    rank += smaller * factorial_small(n_ - 1 - i);
  }
  return rank;
}

long factorial_small(int n) {
  static const long table[] = {1,
                               1,
                               2,
                               6,
                               24,
                               120,
                               720,
                               5040,
                               40320,
                               362880,
                               3628800,
                               39916800,
                               479001600,
                               6227020800L,
                               87178291200L,
                               1307674368000L,
                               20922789888000L,
                               355687428096000L,
                               6402373705728000L,
                               121645100408832000L,
                               2432902008176640000L};
  if (n < 0 || n > 20) throw std::invalid_argument("factorial_small: out of range");
  return table[n];
}

namespace {

constexpr int kEnumGuard = 8;

std::vector<Perm> build_sn(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> out;
  out.reserve(std::size_t(factorial_small(n)));
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

const std::vector<Perm>& symmetric_group(int n) {
  if (n < 1 || n > kEnumGuard)
    throw std::domain_error("symmetric_group: enumeration limited to n <= 8");
  static std::map<int, std::vector<Perm>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_sn(n)).first;
  return it->second;
}

const std::vector<Perm>& alternating_group(int n) {
  if (n < 1 || n > kEnumGuard)
    throw std::domain_error("alternating_group: enumeration limited to n <= 8");
  static std::map<int, std::vector<Perm>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Perm> evens;
    for (const Perm& p : symmetric_group(n))
      if (p.even()) evens.push_back(p);
    it = cache.emplace(n, std::move(evens)).first;
  }
  return it->second;
}

long count_roots(const Perm& b, int r) {
  if (r < 1) throw std::invalid_argument("count_roots: r must be positive");
  long cnt = 0;
  for (const Perm& s : symmetric_group(b.n()))
    if (s.power(r) == b) ++cnt;
  return cnt;
}

}  // namespace covnum
