#include "hecke/arith.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hecke {

std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  Int n(num), d(den);
  if (d == 0) return std::nullopt;
  return make_rational(n, d);
}

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t sz = out.size();
    uint64_t pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t isqrt_u64(uint64_t n) {
  if (n == 0) return 0;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(uint64_t n) {
  const uint64_t r = isqrt_u64(n);
  return r * r == n;
}

std::pair<uint64_t, uint64_t> square_part(uint64_t n) {
  uint64_t s = 1, core = 1;
  for (const auto& [p, e] : factorize(n)) {
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) core *= p;
  }
  return {s, core};
}

uint64_t psi(uint64_t n) {
  uint64_t r = n;
  for (const auto& [p, e] : factorize(n)) r += r / p;
  return r;
}

uint64_t psi_new(uint64_t n) {
  uint64_t r = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e == 1) {
      r *= p - 1;
    } else if (e == 2) {
      r *= p * p - p - 1;
    } else {
      uint64_t pw = 1;
      for (int i = 0; i < e - 3; ++i) pw *= p;
      r *= pw * (p - 1) * (p - 1) * (p + 1);
    }
  }
  return r;
}

Int sigma(int j, uint64_t n) {
  if (j != 0 && j != 1) throw precondition_error("sigma: j must be 0 or 1");
  Int r = 0;
  for (uint64_t d : divisors(n)) r += (j == 0) ? Int(1) : Int(d);
  return r;
}

int moebius(uint64_t n) {
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

int beta(uint64_t n) {
  int r = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e == 1)
      r *= -2;
    else if (e == 2)
      r *= 1;
    else
      return 0;
  }
  return r;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (const auto& [p, e] : factorize(n)) r -= r / p;
  return r;
}

namespace {

// Enumerates reduced positive forms a x^2 + b xy + c y^2 of discriminant -n
// (|b| <= a <= c, b >= 0 if a = c or |b| = a), calling fn(a, b, c, count)
// where count is the number of reduced forms with those |coefficients|.
template <typename Fn>
void enumerate_reduced_forms(uint64_t n, Fn&& fn) {
  // b^2 - 4ac = -n with b <= a <= c forces 3b^2 <= n and b == n (mod 2).
  for (uint64_t b = n % 2; 3 * b * b <= n; b += 2) {
    const uint64_t four_m = b * b + n;
    if (four_m % 4 != 0) continue;
    const uint64_t m = four_m / 4;  // = a*c
    for (uint64_t a = std::max<uint64_t>(b, 1); a * a <= m; ++a) {
      if (m % a != 0) continue;
      const uint64_t c = m / a;
      const int count = (b > 0 && b < a && a < c) ? 2 : 1;  // +/- b
      fn(a, b, c, count);
    }
  }
}

Rational form_weight(uint64_t a, uint64_t b, uint64_t c) {
  if (a == b && b == c) return make_rational(1, 3);   // ~ x^2 + xy + y^2
  if (b == 0 && a == c) return make_rational(1, 2);   // ~ x^2 + y^2
  return 1;
}

}  // namespace

Rational hurwitz_direct(uint64_t n) {
  if (n == 0) return make_rational(-1, 12);
  if (n % 4 == 1 || n % 4 == 2) return 0;
  Rational h = 0;
  enumerate_reduced_forms(n, [&](uint64_t a, uint64_t b, uint64_t c, int cnt) {
    h += Rational(cnt) * form_weight(a, b, c);
  });
  return h;
}

Rational weighted_class_number(long long disc) {
  if (disc >= 0 || (disc % 4 != 0 && ((disc % 4) + 4) % 4 != 1))
    throw precondition_error("weighted_class_number: not a negative discriminant");
  const uint64_t n = static_cast<uint64_t>(-disc);
  Rational h = 0;
  enumerate_reduced_forms(n, [&](uint64_t a, uint64_t b, uint64_t c, int cnt) {
    if (std::gcd(std::gcd(a, b), c) != 1) return;  // primitive forms only
    Rational w = 1;
    if (a == 1 && b == 1 && c == 1) w = make_rational(1, 3);
    if (a == 1 && b == 0 && c == 1) w = make_rational(1, 2);
    h += Rational(cnt) * w;
  });
  return h;
}

namespace {
std::shared_ptr<const std::vector<Rational>> g_hurwitz_table;
std::mutex g_hurwitz_mutex;
}  // namespace

std::shared_ptr<const std::vector<Rational>> hurwitz_table() {
  std::lock_guard lock(g_hurwitz_mutex);
  return g_hurwitz_table;
}

void install_hurwitz_table(std::vector<Rational> values) {
  for (std::size_t n = 0; n < values.size(); ++n) {
    const Rational& h = values[n];
    if (n == 0) {
      if (h != make_rational(-1, 12))
        throw precondition_error("hurwitz table: H(0) must be -1/12");
      continue;
    }
    if ((n % 4 == 1 || n % 4 == 2) && h != 0)
      throw precondition_error("hurwitz table: H(n) must vanish for n = 1,2 mod 4");
    if (sgn(h) < 0)
      throw precondition_error("hurwitz table: negative value at n > 0");
    if (Int(6) % h.get_den() != 0)
      throw precondition_error("hurwitz table: denominator must divide 6");
  }
  auto ptr = std::make_shared<const std::vector<Rational>>(std::move(values));
  std::lock_guard lock(g_hurwitz_mutex);
  g_hurwitz_table = std::move(ptr);
}

void precompute_hurwitz(uint64_t bound) {
  {
    std::lock_guard lock(g_hurwitz_mutex);
    if (g_hurwitz_table && g_hurwitz_table->size() > bound) return;
  }
  std::vector<Rational> t(bound + 1);
  for (uint64_t n = 0; n <= bound; ++n) t[n] = hurwitz_direct(n);
  auto ptr = std::make_shared<const std::vector<Rational>>(std::move(t));
  std::lock_guard lock(g_hurwitz_mutex);
  if (!g_hurwitz_table || g_hurwitz_table->size() <= bound)
    g_hurwitz_table = std::move(ptr);
}

Rational hurwitz(uint64_t n) {
  if (auto t = hurwitz_table(); t && n < t->size()) return (*t)[n];
  return hurwitz_direct(n);
}

std::vector<Rational> load_hurwitz_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open hurwitz table: " + path);
  std::vector<Rational> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    auto fail = [&](const std::string& what) {
      std::ostringstream os;
      os << path << ":" << lineno << ": " << what;
      throw precondition_error(os.str());
    };
    if (comma == std::string::npos) fail("expected 'n,value'");
    const std::string idx = line.substr(0, comma);
    const auto value = parse_rational(line.substr(comma + 1));
    if (!value) fail("unparsable value");
    char* end = nullptr;
    const unsigned long n = std::strtoul(idx.c_str(), &end, 10);
    if (end == idx.c_str() || *end != '\0') fail("unparsable index");
    if (n != values.size()) fail("indices must be 0,1,2,... in order");
    values.push_back(*value);
  }
  return values;
}

}  // namespace hecke
