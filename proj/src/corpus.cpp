#include "hallbound/corpus.hpp"

#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include "hallbound/config.hpp"
#include "hallbound/primes.hpp"

namespace hallbound {

namespace {

void check_degree(std::size_t degree) {
  if (degree > kMaxConstructedDegree)
    throw CapExceeded("construction degree " + std::to_string(degree) + " exceeds " +
                      std::to_string(kMaxConstructedDegree));
}

Permutation cycle_on(std::size_t degree, std::vector<Point> pts) {
  return Permutation::from_cycles(degree, std::vector<std::vector<Point>>{std::move(pts)});
}

std::vector<Point> range(Point from, Point to) {
  std::vector<Point> v(to - from);
  std::iota(v.begin(), v.end(), from);
  return v;
}

// GF(q) for prime powers q, elements encoded as base-p digit strings of
// polynomial coefficients; multiplication reduces by a fixed irreducible.
class FiniteField {
 public:
  explicit FiniteField(std::uint64_t q) : q_(q) {
    auto ps = prime_divisors(q);
    if (ps.size() != 1)
      throw PreconditionError(std::to_string(q) + " is not a prime power");
    p_ = ps[0];
    for (std::uint64_t t = q; t > 1; t /= p_)
      ++k_;
    find_irreducible();
    build_tables();
  }

  std::uint64_t size() const { return q_; }
  std::uint64_t prime() const { return p_; }
  bool is_prime_field() const { return k_ == 1; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return add_[a * q_ + b]; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_[a * q_ + b]; }
  std::uint64_t neg(std::uint64_t a) const {
    for (std::uint64_t b = 0; b < q_; ++b)
      if (add(a, b) == 0)
        return b;
    return 0;
  }
  std::uint64_t inv(std::uint64_t a) const {
    for (std::uint64_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1)
        return b;
    throw PreconditionError("zero has no inverse");
  }
  std::uint64_t one() const { return 1; }
  std::uint64_t primitive() const {
    for (std::uint64_t g = 1; g < q_; ++g) {
      std::uint64_t x = g, ord = 1;
      while (x != 1) {
        x = mul(x, g);
        ++ord;
      }
      if (ord == q_ - 1)
        return g;
    }
    return 1;
  }

 private:
  std::vector<std::uint64_t> digits(std::uint64_t a) const {
    std::vector<std::uint64_t> d(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }
  std::uint64_t encode(const std::vector<std::uint64_t>& d) const {
    std::uint64_t a = 0;
    for (std::size_t i = k_; i-- > 0;)
      a = a * p_ + d[i];
    return a;
  }

  // Monic polynomial of degree k with no roots; sufficient for k <= 3.
  void find_irreducible() {
    if (k_ > 3)
      throw PreconditionError("field extension degree above 3 is unsupported");
    modulus_.assign(k_ + 1, 0);
    modulus_[k_] = 1;
    if (k_ == 1)
      return;
    const std::uint64_t combos = q_;
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t t = c;
      for (std::size_t i = 0; i < k_; ++i) {
        modulus_[i] = t % p_;
        t /= p_;
      }
      bool has_root = false;
      for (std::uint64_t x = 0; x < p_ && !has_root; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = k_ + 1; i-- > 0;)
          v = (v * x + modulus_[i]) % p_;
        has_root = v == 0;
      }
      if (!has_root)
        return;
    }
    throw EngineError("no irreducible polynomial found");
  }

  void build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a) {
      const auto da = digits(a);
      for (std::uint64_t b = 0; b < q_; ++b) {
        const auto db = digits(b);
        std::vector<std::uint64_t> s(k_);
        for (std::size_t i = 0; i < k_; ++i)
          s[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = encode(s);

        std::vector<std::uint64_t> prod(2 * k_, 0);
        for (std::size_t i = 0; i < k_; ++i)
          for (std::size_t j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (std::size_t d = 2 * k_; d-- > k_;) {
          const std::uint64_t c = prod[d];
          if (c == 0)
            continue;
          for (std::size_t i = 0; i <= k_; ++i)
            prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
        prod.resize(k_);
        mul_[a * q_ + b] = encode(prod);
      }
    }
  }

  std::uint64_t q_;
  std::uint64_t p_ = 0;
  std::size_t k_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> add_;
  std::vector<std::uint64_t> mul_;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

PermGroup cyclic_group(std::size_t n) {
  if (n == 0)
    throw PreconditionError("C0 is not a group");
  check_degree(n);
  if (n == 1)
    return PermGroup(1);
  return PermGroup(n, {cycle_on(n, range(0, static_cast<Point>(n)))});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3)
    throw PreconditionError("dihedral group D2n needs n >= 3");
  check_degree(n);
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i)
    refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_on(n, range(0, static_cast<Point>(n))), Permutation(refl)});
}

PermGroup symmetric_group(std::size_t n) {
  if (n == 0)
    throw PreconditionError("S0 is not supported");
  check_degree(n);
  if (n == 1)
    return PermGroup(1);
  if (n == 2)
    return PermGroup(2, {cycle_on(2, {0, 1})});
  return PermGroup(n, {cycle_on(n, {0, 1}), cycle_on(n, range(0, static_cast<Point>(n)))});
}

PermGroup alternating_group(std::size_t n) {
  if (n == 0)
    throw PreconditionError("A0 is not supported");
  check_degree(n);
  if (n < 3)
    return PermGroup(n);
  if (n == 3)
    return PermGroup(3, {cycle_on(3, {0, 1, 2})});
  const auto m = static_cast<Point>(n);
  Permutation big = n % 2 == 1 ? cycle_on(n, range(0, m)) : cycle_on(n, range(1, m));
  return PermGroup(n, {cycle_on(n, {0, 1, 2}), big});
}

PermGroup psl2(std::uint64_t q) {
  FiniteField F(q);
  const std::size_t n = q + 1;
  const auto inf = static_cast<Point>(q);
  std::vector<Point> translate(n), invert(n);
  for (std::uint64_t x = 0; x < q; ++x) {
    translate[x] = static_cast<Point>(F.add(x, F.one()));
    invert[x] = x == 0 ? inf : static_cast<Point>(F.neg(F.inv(x)));
  }
  translate[inf] = inf;
  invert[inf] = 0;
  std::vector<Permutation> gens{Permutation(translate), Permutation(invert)};
  if (!F.is_prime_field()) {
    // x -> w^2 x reaches the translations outside the prime field.
    const std::uint64_t w = F.primitive();
    const std::uint64_t w2 = F.mul(w, w);
    std::vector<Point> scale(n);
    for (std::uint64_t x = 0; x < q; ++x)
      scale[x] = static_cast<Point>(F.mul(w2, x));
    scale[inf] = inf;
    gens.emplace_back(scale);
  }
  return PermGroup(n, std::move(gens));
}

PermGroup sl2(std::uint64_t q) {
  FiniteField F(q);
  const std::size_t n = q * q - 1;
  // Vector (a, b) != 0 has index a*q + b - 1.
  auto index = [q](std::uint64_t a, std::uint64_t b) { return static_cast<Point>(a * q + b - 1); };
  using Matrix = std::array<std::uint64_t, 4>;  // row-major [[m0,m1],[m2,m3]]
  auto act = [&](const Matrix& M) {
    std::vector<Point> img(n);
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b) {
        if (a == 0 && b == 0)
          continue;
        // Row vector times matrix.
        const std::uint64_t na = F.add(F.mul(a, M[0]), F.mul(b, M[2]));
        const std::uint64_t nb = F.add(F.mul(a, M[1]), F.mul(b, M[3]));
        img[index(a, b)] = index(na, nb);
      }
    return Permutation(img);
  };
  const std::uint64_t minus_one = F.neg(F.one());
  std::vector<Permutation> gens{act({1, 1, 0, 1}), act({0, minus_one, 1, 0})};
  if (!F.is_prime_field()) {
    const std::uint64_t w = F.primitive();
    gens.push_back(act({w, 0, 0, F.inv(w)}));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  const std::size_t da = A.degree(), db = B.degree(), n = da + db;
  check_degree(n);
  std::vector<Permutation> gens;
  for (const auto& g : A.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point i = 0; i < da; ++i)
      img[i] = g(i);
    gens.emplace_back(img);
  }
  for (const auto& g : B.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point i = 0; i < db; ++i)
      img[da + i] = static_cast<Point>(da + g(i));
    gens.emplace_back(img);
  }
  return PermGroup(n, std::move(gens));
}

PermGroup wreath_product(const PermGroup& B, const PermGroup& T) {
  const std::size_t d = B.degree(), k = T.degree(), n = d * k;
  check_degree(n);
  std::vector<Permutation> gens;
  for (std::size_t block = 0; block < k; ++block)
    for (const auto& g : B.generators()) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      for (Point j = 0; j < d; ++j)
        img[block * d + j] = static_cast<Point>(block * d + g(j));
      gens.emplace_back(img);
    }
  for (const auto& t : T.generators()) {
    std::vector<Point> img(n);
    for (Point block = 0; block < k; ++block)
      for (Point j = 0; j < d; ++j)
        img[block * d + j] = static_cast<Point>(t(block) * d + j);
    gens.emplace_back(img);
  }
  return PermGroup(n, std::move(gens));
}

// ---------------------------------------------------------------------------

namespace {

struct Leaf {
  char family;  // C D S A P(SL) L(SL)
  std::uint64_t param;
};

Leaf parse_leaf(const std::string& name) {
  static const std::regex simple(R"(^([CDSA])_?\{?(\d+)\}?$)");
  static const std::regex linear(R"(^(PSL|SL)\(\s*2\s*,\s*(\d+)\s*\)$)");
  std::smatch m;
  auto to_u64 = [&](const std::string& s) {
    if (s.size() > 6)
      throw PreconditionError("parameter out of range in " + name);
    return std::stoull(s);
  };
  if (std::regex_match(name, m, simple)) {
    const char fam = m[1].str()[0];
    const std::uint64_t v = to_u64(m[2].str());
    switch (fam) {
      case 'C':
        if (v < 1 || v > kMaxConstructedDegree)
          throw PreconditionError("C_n needs 1 <= n <= 4096: " + name);
        break;
      case 'D':
        if (v % 2 != 0 || v < 6 || v / 2 > kMaxConstructedDegree)
          throw PreconditionError("D_2n needs even order >= 6: " + name);
        break;
      default:
        if (v < 1 || v > 10)
          throw PreconditionError("S_n and A_n need 1 <= n <= 10: " + name);
    }
    return {fam, v};
  }
  if (std::regex_match(name, m, linear)) {
    const bool projective = m[1].str() == "PSL";
    const std::uint64_t q = to_u64(m[2].str());
    if (prime_divisors(q).size() != 1)
      throw PreconditionError("q must be a prime power: " + name);
    if (projective ? q > 13 : q > 5)
      throw PreconditionError("field size out of range: " + name);
    return {projective ? 'P' : 'L', q};
  }
  throw PreconditionError("unknown group name: " + name);
}

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec g = expr();
    skip_ws();
    if (i_ != s_.size())
      throw PreconditionError("trailing input in group spec: " + s_);
    return g;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }

  bool take(const std::string& tok) {
    skip_ws();
    if (s_.compare(i_, tok.size(), tok) == 0) {
      i_ += tok.size();
      return true;
    }
    return false;
  }

  GroupSpec expr() {
    GroupSpec left = primary();
    for (;;) {
      GroupSpec::Kind kind;
      if (take("wr"))
        kind = GroupSpec::Kind::Wreath;
      else if (take("x") || take("*") || take("\xC3\x97"))
        kind = GroupSpec::Kind::Direct;
      else
        break;
      GroupSpec right = primary();
      GroupSpec node;
      node.kind = kind;
      node.children = {std::move(left), std::move(right)};
      left = std::move(node);
    }
    return left;
  }

  GroupSpec primary() {
    skip_ws();
    if (take("(")) {
      GroupSpec g = expr();
      if (!take(")"))
        throw PreconditionError("missing ')' in group spec: " + s_);
      return g;
    }
    const std::size_t start = i_;
    if (s_.compare(i_, 3, "PSL") == 0 || s_.compare(i_, 2, "SL") == 0) {
      const auto close = s_.find(')', i_);
      if (close == std::string::npos)
        throw PreconditionError("unterminated linear group name: " + s_);
      i_ = close + 1;
    } else {
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' ||
              s_[i_] == '{' || s_[i_] == '}')) {
        // Stop before a glued operator such as "A5x": letters after digits end the name.
        if (i_ > start && std::isalpha(static_cast<unsigned char>(s_[i_])) &&
            std::isdigit(static_cast<unsigned char>(s_[i_ - 1])))
          break;
        ++i_;
      }
    }
    GroupSpec leaf;
    leaf.leaf = s_.substr(start, i_ - start);
    if (leaf.leaf.empty())
      throw PreconditionError("expected a group name in: " + s_);
    parse_leaf(leaf.leaf);
    return leaf;
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Leaf:
      return leaf;
    case Kind::Direct:
    case Kind::Wreath: {
      auto wrap = [](const GroupSpec& g) {
        return g.kind == Kind::Leaf ? g.to_string() : "(" + g.to_string() + ")";
      };
      return wrap(children[0]) + (kind == Kind::Direct ? " x " : " wr ") + wrap(children[1]);
    }
  }
  return leaf;
}

GroupSpec parse_group_spec(const std::string& text) { return SpecParser(text).parse(); }

PermGroup build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Direct:
      return direct_product(build_group(spec.children[0]), build_group(spec.children[1]));
    case GroupSpec::Kind::Wreath:
      return wreath_product(build_group(spec.children[0]), build_group(spec.children[1]));
    case GroupSpec::Kind::Leaf:
      break;
  }
  const Leaf leaf = parse_leaf(spec.leaf);
  switch (leaf.family) {
    case 'C':
      return cyclic_group(leaf.param);
    case 'D':
      return dihedral_group(leaf.param / 2);
    case 'S':
      return symmetric_group(leaf.param);
    case 'A':
      return alternating_group(leaf.param);
    case 'P':
      return psl2(leaf.param);
    default:
      return sl2(leaf.param);
  }
}

PermGroup make_named(const std::string& text) { return build_group(parse_group_spec(text)); }

std::uint64_t closed_form_order(const GroupSpec& spec) {
  auto checked_mul = [](std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    if (r > UINT64_MAX)
      throw CapExceeded("closed-form order overflows 64 bits");
    return static_cast<std::uint64_t>(r);
  };
  switch (spec.kind) {
    case GroupSpec::Kind::Direct:
      return checked_mul(closed_form_order(spec.children[0]), closed_form_order(spec.children[1]));
    case GroupSpec::Kind::Wreath: {
      const std::uint64_t b = closed_form_order(spec.children[0]);
      const std::size_t k = build_group(spec.children[1]).degree();
      std::uint64_t r = closed_form_order(spec.children[1]);
      for (std::size_t i = 0; i < k; ++i)
        r = checked_mul(r, b);
      return r;
    }
    case GroupSpec::Kind::Leaf:
      break;
  }
  const Leaf leaf = parse_leaf(spec.leaf);
  const std::uint64_t n = leaf.param;
  std::uint64_t fact = 1;
  switch (leaf.family) {
    case 'C':
      return n;
    case 'D':
      return n;
    case 'S':
      for (std::uint64_t i = 2; i <= n; ++i)
        fact *= i;
      return fact;
    case 'A':
      for (std::uint64_t i = 2; i <= n; ++i)
        fact *= i;
      return n < 2 ? 1 : fact / 2;
    case 'P':
      return n * (n * n - 1) / gcd_u64(2, n - 1);
    default:
      return n * (n * n - 1);
  }
}

PermGroup parse_group_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    line = line.substr(first);
    if (!have_degree) {
      std::istringstream ls(line);
      std::string kw;
      long long d = -1;
      ls >> kw >> d;
      std::string rest;
      if (kw != "degree" || d <= 0 || (ls >> rest))
        throw PreconditionError("group file must start with 'degree N'");
      degree = static_cast<std::size_t>(d);
      check_degree(degree);
      have_degree = true;
      continue;
    }
    gens.push_back(parse_cycles(degree, line));
  }
  if (!have_degree)
    throw PreconditionError("group file has no 'degree N' line");
  return PermGroup(degree, std::move(gens));
}

PermGroup load_group(const std::string& spec_or_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec_or_path, ec)) {
    std::ifstream f(spec_or_path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_group_file(ss.str());
  }
  return make_named(spec_or_path);
}

}  // namespace hallbound
