#include "gmap/monodromy.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gmap/error.hpp"

namespace gmap {

namespace {

int positive_mod(long long x, int m) {
  const long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void require_valid(const MonodromyDatum& d, const char* what) {
  const auto violations = validate(d);
  if (!violations.empty()) {
    throw Error(ErrorCode::InvalidDatum, "monodromy",
                std::string(what) + ": " + violations.front().message);
  }
}

// Recursive-descent reader over the monodromy grammar.
class Reader {
public:
  explicit Reader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  // <res>[^<count>]
  void run(std::vector<int>& out) {
    const std::size_t at = pos_;
    const int residue = integer();
    int count = 1;
    if (accept('^')) count = integer();
    if (count == 0) {
      pos_ = at;
      fail("zero repetition count");
    }
    out.insert(out.end(), static_cast<std::size_t>(count), residue);
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::string_view to_string(Violation v) {
  switch (v) {
  case Violation::OrderTooSmall: return "OrderTooSmall";
  case Violation::ResidueOutOfRange: return "ResidueOutOfRange";
  case Violation::SumNotZero: return "SumNotZero";
  case Violation::NotSurjective: return "NotSurjective";
  case Violation::TooFewBranchPoints: return "TooFewBranchPoints";
  }
  return "Unknown";
}

std::vector<ViolationReport> validate(const MonodromyDatum& d) {
  std::vector<ViolationReport> out;
  if (d.m < 2) {
    out.push_back({Violation::OrderTooSmall, "group order m = " + std::to_string(d.m) + " < 2"});
    return out;
  }
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    if (d.a[i] < 1 || d.a[i] >= d.m) {
      out.push_back({Violation::ResidueOutOfRange,
                     "a_" + std::to_string(i + 1) + " = " + std::to_string(d.a[i]) +
                         " is not in 1.." + std::to_string(d.m - 1)});
    }
  }
  const long long sum = std::accumulate(d.a.begin(), d.a.end(), 0LL);
  if (positive_mod(sum, d.m) != 0) {
    out.push_back({Violation::SumNotZero, "sum of residues = " + std::to_string(sum) + " is " +
                                              std::to_string(positive_mod(sum, d.m)) +
                                              " mod " + std::to_string(d.m) + ", not 0"});
  }
  int g = d.m;
  for (int x : d.a) g = std::gcd(g, positive_mod(x, d.m));
  if (g != 1) {
    out.push_back({Violation::NotSurjective, "gcd(a_1..a_r, m) = " + std::to_string(g) +
                                                 " != 1: not an epimorphism onto Z/" +
                                                 std::to_string(d.m)});
  }
  if (d.a.size() < 3) {
    out.push_back({Violation::TooFewBranchPoints,
                   "r = " + std::to_string(d.a.size()) + " branch points, need at least 3"});
  }
  return out;
}

int genus(const MonodromyDatum& d) {
  require_valid(d, "genus");
  // 2g - 2 = m(-2 + sum(1 - 1/m_i)) with m_i = m / gcd(a_i, m).
  long long euler = -2LL * d.m;
  for (int x : d.a) euler += d.m - std::gcd(x, d.m);
  if (euler < -2 || (euler + 2) % 2 != 0) {
    throw Error(ErrorCode::NonIntegralGenus, "monodromy",
                "Riemann-Hurwitz gives 2g - 2 = " + std::to_string(euler));
  }
  return static_cast<int>((euler + 2) / 2);
}

std::vector<int> eigenspace_dimensions(const MonodromyDatum& d) {
  require_valid(d, "eigenspace_dimensions");
  std::vector<int> dims;
  for (int n = 1; n < d.m; ++n) {
    // d_n = -1 + sum_j <-n a_j / m>; the numerators sum to a multiple of m.
    long long numer = 0;
    for (int x : d.a) numer += positive_mod(-1LL * n * x, d.m);
    dims.push_back(static_cast<int>(numer / d.m) - 1);
  }
  return dims;
}

MonodromyDatum normalize(const MonodromyDatum& d) {
  const auto unit = std::find_if(d.a.begin(), d.a.end(), [&](int x) { return std::gcd(x, d.m) == 1; });
  if (unit == d.a.end()) {
    throw Error(ErrorCode::NoTotallyRamifiedPoint, "monodromy",
                "no residue is a unit mod " + std::to_string(d.m) +
                    ", so no branch point is totally ramified");
  }
  require_valid(d, "normalize");
  int inverse = 1;
  while (positive_mod(1LL * inverse * *unit, d.m) != 1) ++inverse;
  MonodromyDatum out{d.m, {}};
  for (int x : d.a) out.a.push_back(positive_mod(1LL * x * inverse, d.m));
  std::swap(out.a.front(), out.a[static_cast<std::size_t>(unit - d.a.begin())]);
  return out;
}

std::vector<Rational> default_branch_points(std::size_t r) {
  if (r < 3) {
    throw Error(ErrorCode::InvalidArgument, "monodromy", "need at least 3 branch points");
  }
  std::vector<Rational> t{0};
  for (long k = 1; t.size() < r; ++k) {
    t.emplace_back(k);
    if (t.size() < r) t.emplace_back(-k);
  }
  return t;
}

std::vector<GaloisFamilyClass> enumerate_galois(int g, int gprime) {
  if (gprime < 1) {
    throw Error(ErrorCode::InvalidArgument, "monodromy", "quotient genus must be >= 1");
  }
  if (g < 3 * gprime) {
    throw Error(ErrorCode::EmptyLocus, "monodromy",
                "no Galois family for g = " + std::to_string(g) + ", g' = " +
                    std::to_string(gprime) + ": need g >= 3g' (r_2 = g - 3g' < 0)");
  }
  const int r4 = 2 * gprime + 2;
  const int r2 = g - 3 * gprime;
  std::vector<GaloisFamilyClass> out;
  for (int s1 = r4; 2 * s1 >= r4; --s1) {
    if ((s1 - (g + 1)) % 2 != 0) continue;
    GaloisFamilyClass c{g, gprime, s1, r4 - s1, r2, {4, {}}};
    c.representative.a.insert(c.representative.a.end(), static_cast<std::size_t>(c.s1), 1);
    c.representative.a.insert(c.representative.a.end(), static_cast<std::size_t>(c.s3), 3);
    c.representative.a.insert(c.representative.a.end(), static_cast<std::size_t>(c.r2), 2);
    if (genus(c.representative) != g) {
      throw Error(ErrorCode::NonIntegralGenus, "monodromy",
                  "representative " + shorthand(c.representative) + " does not have genus " +
                      std::to_string(g));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string shorthand(const MonodromyDatum& d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < d.a.size();) {
    std::size_t j = i;
    while (j < d.a.size() && d.a[j] == d.a[i]) ++j;
    if (i > 0) os << ':';
    os << d.a[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ']';
  return os.str();
}

std::string format_monodromy(const MonodromyDatum& d) {
  std::ostringstream os;
  os << "m=" << d.m << ";a=";
  for (std::size_t i = 0; i < d.a.size();) {
    std::size_t j = i;
    while (j < d.a.size() && d.a[j] == d.a[i]) ++j;
    if (i > 0) os << ',';
    os << d.a[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

MonodromyDatum parse_monodromy(std::string_view text) {
  Reader in(text);
  MonodromyDatum d;
  if (in.accept('[')) {
    d.m = 4;
    do {
      in.run(d.a);
    } while (in.accept(':'));
    in.expect(']');
  } else {
    in.expect('m');
    in.expect('=');
    d.m = in.integer();
    in.expect(';');
    in.expect('a');
    in.expect('=');
    do {
      in.run(d.a);
    } while (in.accept(','));
  }
  if (!in.at_end()) in.fail("trailing characters");
  return d;
}

} // namespace gmap
