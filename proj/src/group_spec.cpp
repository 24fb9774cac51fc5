#include "cheb/group_spec.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "cheb/error.hpp"
#include "cheb/gf.hpp"

namespace cheb {

namespace {

[[noreturn]] void parse_fail(const std::string& why) { throw Error(ErrorCode::ParseError, why); }

std::string squeeze(std::string s) {
  std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
  return s;
}

// Generators on `degree` points, before closure.
struct RawGroup {
  std::size_t degree = 1;
  std::vector<Permutation> gens;
};

std::size_t to_size(const std::string& tok, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    parse_fail(std::string("expected integer for ") + what + ", got '" + tok + "'");
  return v;
}

Permutation cycle_perm(std::size_t degree, std::size_t start, std::size_t len) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < len; ++i) img[start + i] = static_cast<Point>(start + (i + 1) % len);
  return Permutation(std::move(img));
}

Permutation transposition(std::size_t degree, std::size_t a, std::size_t b) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::swap(img[a], img[b]);
  return Permutation(std::move(img));
}

RawGroup cyclic(std::size_t n) {
  if (n == 0) parse_fail("cyclic order must be positive");
  return {n, {cycle_perm(n, 0, n)}};
}

RawGroup elementary(std::size_t p, std::size_t d) {
  if (!gf::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::size_t points = 1;
  for (std::size_t i = 0; i < d; ++i) {
    points *= p;
    if (points > 1u << 20) throw Error(ErrorCode::OrderCapExceeded, "elementary group too large");
  }
  RawGroup g{points, {}};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Point> img(points);
    for (std::size_t x = 0; x < points; ++x) {
      gf::Vec v = gf::decode(x, d, static_cast<gf::Elem>(p));
      v[i] = static_cast<gf::Elem>((v[i] + 1) % p);
      img[x] = static_cast<Point>(gf::encode(v, static_cast<gf::Elem>(p)));
    }
    g.gens.emplace_back(std::move(img));
  }
  return g;
}

RawGroup dihedral(std::size_t n) {
  if (n < 3) parse_fail("dihedral n needs n >= 3 (order 2n on n points)");
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return {n, {cycle_perm(n, 0, n), Permutation(std::move(refl))}};
}

RawGroup symmetric(std::size_t n) {
  if (n == 0) parse_fail("symmetric degree must be positive");
  if (n == 1) return {1, {}};
  return {n, {cycle_perm(n, 0, n), transposition(n, 0, 1)}};
}

RawGroup alternating(std::size_t n) {
  if (n == 0) parse_fail("alternating degree must be positive");
  RawGroup g{n, {}};
  // 3-cycles (1,2,k) generate A_n
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(k);
    img[k] = 0;
    g.gens.emplace_back(std::move(img));
  }
  return g;
}

RawGroup quaternion8() {
  // elements s * u, s in {+,-}, u in {1,i,j,k}; index = 4*(s<0) + u
  static constexpr int unit_mul[4][4][2] = {
      // {sign, unit}
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  auto right_mul = [](int by) {
    std::vector<Point> img(8);
    for (int x = 0; x < 8; ++x) {
      const int sign = x >= 4 ? -1 : 1;
      const auto& r = unit_mul[x % 4][by];
      const int s = sign * r[0];
      img[x] = static_cast<Point>((s < 0 ? 4 : 0) + r[1]);
    }
    return Permutation(std::move(img));
  };
  return {8, {right_mul(1), right_mul(2)}};
}

RawGroup direct_product(const std::vector<RawGroup>& parts) {
  RawGroup g{0, {}};
  for (const auto& p : parts) g.degree += p.degree;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& s : p.gens) {
      std::vector<Point> img(g.degree);
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t i = 0; i < p.degree; ++i) img[offset + i] = static_cast<Point>(offset + s[i]);
      g.gens.emplace_back(std::move(img));
    }
    offset += p.degree;
  }
  return g;
}

gf::Matrix parse_matrix(const std::string& tok, std::size_t p, std::size_t n) {
  // [[a,b],[c,d]]
  std::vector<std::vector<long long>> rows;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < tok.size() && std::isspace(static_cast<unsigned char>(tok[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= tok.size() || tok[i] != c) parse_fail("matrix '" + tok + "': expected '" + std::string(1, c) + "'");
    ++i;
  };
  expect('[');
  while (true) {
    expect('[');
    std::vector<long long> row;
    while (true) {
      skip();
      std::size_t j = i;
      if (j < tok.size() && tok[j] == '-') ++j;
      while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
      long long v = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + i, tok.data() + j, v);
      if (ec != std::errc() || ptr != tok.data() + j) parse_fail("matrix '" + tok + "': bad entry");
      row.push_back(v);
      i = j;
      skip();
      if (i < tok.size() && tok[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
    rows.push_back(std::move(row));
    skip();
    if (i < tok.size() && tok[i] == ',') {
      ++i;
      continue;
    }
    expect(']');
    break;
  }
  skip();
  if (i != tok.size()) parse_fail("matrix '" + tok + "': trailing characters");
  if (rows.size() != n) parse_fail("matrix '" + tok + "': expected " + std::to_string(n) + " rows");
  gf::Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) parse_fail("matrix '" + tok + "': expected " + std::to_string(n) + " columns");
    for (std::size_t c = 0; c < n; ++c) {
      const long long pp = static_cast<long long>(p);
      m.at(r, c) = static_cast<gf::Elem>(((rows[r][c] % pp) + pp) % pp);
    }
  }
  if (!gf::is_invertible(m, static_cast<gf::Elem>(p)))
    throw Error(ErrorCode::NotInvertibleMatrix, "matrix " + tok + " is singular mod " + std::to_string(p));
  return m;
}

RawGroup affine(std::size_t p, std::size_t n, const std::vector<gf::Matrix>& h, std::size_t power) {
  const auto pe = static_cast<gf::Elem>(p);
  const std::size_t dim = n * power;
  std::size_t points = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    points *= p;
    if (points > 1u << 20) throw Error(ErrorCode::OrderCapExceeded, "affine module too large");
  }
  RawGroup g{points, {}};
  // translations by basis vectors
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Point> img(points);
    for (std::size_t x = 0; x < points; ++x) {
      gf::Vec v = gf::decode(x, dim, pe);
      v[i] = (v[i] + 1) % pe;
      img[x] = static_cast<Point>(gf::encode(v, pe));
    }
    g.gens.emplace_back(std::move(img));
  }
  // H acts on each block as v -> v A
  for (const auto& a : h) {
    std::vector<Point> img(points);
    for (std::size_t x = 0; x < points; ++x) {
      gf::Vec v = gf::decode(x, dim, pe);
      gf::Vec w(dim);
      for (std::size_t b = 0; b < power; ++b) {
        gf::Vec block(v.begin() + static_cast<std::ptrdiff_t>(b * n),
                      v.begin() + static_cast<std::ptrdiff_t>((b + 1) * n));
        gf::Vec out = gf::apply(block, a, pe);
        std::copy(out.begin(), out.end(), w.begin() + static_cast<std::ptrdiff_t>(b * n));
      }
      img[x] = static_cast<Point>(gf::encode(w, pe));
    }
    g.gens.emplace_back(std::move(img));
  }
  return g;
}

class SpecParser {
 public:
  explicit SpecParser(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

  RawGroup parse_all(std::string& label) {
    RawGroup g = parse_one(label);
    if (pos_ != tokens_.size()) parse_fail("unexpected token '" + tokens_[pos_] + "'");
    return g;
  }

 private:
  const std::string& next(const char* what) {
    if (pos_ >= tokens_.size()) parse_fail(std::string("unexpected end of input, expected ") + what);
    return tokens_[pos_++];
  }
  bool at_end() const { return pos_ >= tokens_.size(); }
  std::size_t number(const char* what) { return to_size(next(what), what); }

  RawGroup parse_one(std::string& label) {
    const std::string head = next("constructor");
    if (head == "cyclic") {
      const auto n = number("n");
      label = "cyclic " + std::to_string(n);
      return cyclic(n);
    }
    if (head == "elementary") {
      const auto p = number("p");
      const auto d = number("d");
      label = "elementary " + std::to_string(p) + " " + std::to_string(d);
      return elementary(p, d);
    }
    if (head == "dihedral") {
      const auto n = number("n");
      label = "dihedral " + std::to_string(n);
      return dihedral(n);
    }
    if (head == "symmetric") {
      const auto n = number("n");
      label = "symmetric " + std::to_string(n);
      return symmetric(n);
    }
    if (head == "alternating") {
      const auto n = number("n");
      label = "alternating " + std::to_string(n);
      return alternating(n);
    }
    if (head == "quaternion8") {
      label = "quaternion8";
      return quaternion8();
    }
    if (head == "direct_product") {
      std::vector<RawGroup> parts;
      label = "direct_product";
      while (!at_end() && tokens_[pos_] == "{") {
        ++pos_;
        std::string sub;
        parts.push_back(parse_one(sub));
        if (next("'}'") != "}") parse_fail("expected '}' after " + sub);
        label += " { " + sub + " }";
      }
      if (parts.size() < 2) parse_fail("direct_product needs at least two { spec } factors");
      return direct_product(parts);
    }
    if (head == "affine") {
      const auto p = number("p");
      if (!gf::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
      const auto n = number("n");
      if (n == 0) parse_fail("affine dimension must be positive");
      label = "affine " + std::to_string(p) + " " + std::to_string(n);
      std::vector<gf::Matrix> mats;
      std::size_t power = 1;
      while (!at_end() && !tokens_[pos_].empty() && tokens_[pos_][0] == '[') {
        label += " " + squeeze(tokens_[pos_]);
        mats.push_back(parse_matrix(next("matrix"), p, n));
      }
      if (!at_end() && tokens_[pos_] == "power") {
        ++pos_;
        power = number("power");
        if (power == 0) parse_fail("power must be positive");
        label += " power " + std::to_string(power);
      }
      return affine(p, n, mats, power);
    }
    if (head == "perm") {
      const auto degree = number("degree");
      if (degree == 0) parse_fail("degree must be positive");
      label = "perm " + std::to_string(degree);
      RawGroup g{degree, {}};
      while (!at_end() && !tokens_[pos_].empty() && tokens_[pos_][0] == '(') {
        label += " " + squeeze(tokens_[pos_]);
        g.gens.push_back(Permutation::from_cycles(next("generator"), degree));
      }
      return g;
    }
    parse_fail("unknown constructor '" + head + "'");
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> tokenize_spec(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') {
      if (--depth < 0) parse_fail("unbalanced '" + std::string(1, c) + "'");
    }
    if (depth == 0 && (c == '{' || c == '}')) {
      flush();
      out.emplace_back(1, c);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (depth == 0) {
        flush();
      } else if (c == ' ' || c == '\t') {
        // "(1, 2)" and "[[0, 1], [1, 1]]" stay one token
        cur += c;
      }
    } else {
      // adjacent cycles "(1,2)(3,4)" form one generator; a space between ")(" ends it
      cur += c;
    }
  }
  if (depth != 0) parse_fail("unbalanced brackets");
  flush();
  return out;
}

ParsedGroup parse_group(std::string_view text, std::size_t order_cap) {
  SpecParser parser(tokenize_spec(text));
  std::string label;
  RawGroup raw = parser.parse_all(label);
  return {build_group(raw.degree, raw.gens, order_cap), label};
}

std::vector<ParsedGroup> parse_group_file(std::string_view contents, std::size_t order_cap) {
  std::vector<ParsedGroup> out;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) out.push_back(parse_group(line, order_cap));
    start = end + 1;
  }
  return out;
}

}  // namespace cheb
