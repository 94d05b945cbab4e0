#include "hodge/graded_ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>

#include "hodge/errors.hpp"

#ifndef HODGE_DATA_DIR
#define HODGE_DATA_DIR "data"
#endif

namespace hodge {

RingElement::RingElement(const GradedRing& ring, std::vector<Integer> coeffs) : ring_(&ring), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring.rank()) throw DimensionError("ring element has the wrong number of coefficients");
}

Integer RingElement::coeff(const std::string& symbol) const { return coeffs_[ring_->index(symbol)]; }

bool RingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

RingElement RingElement::part(int degree) const {
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (ring_->degree(k) == degree) out[k] = coeffs_[k];
  return RingElement(*ring_, std::move(out));
}

RingElement RingElement::operator+(const RingElement& o) const {
  if (ring_ != o.ring_) throw PreconditionError("elements of different rings");
  std::vector<Integer> out(coeffs_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += o.coeffs_[k];
  return RingElement(*ring_, std::move(out));
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + o.scaled(-1); }

RingElement RingElement::operator*(const RingElement& o) const { return ring_->multiply(*this, o); }

RingElement RingElement::scaled(const Integer& c) const {
  std::vector<Integer> out(coeffs_);
  for (auto& x : out) x *= c;
  return RingElement(*ring_, std::move(out));
}

bool operator==(const RingElement& a, const RingElement& b) { return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_; }

std::string RingElement::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const std::string& s = ring_->symbol(k);
    if (!out.empty() && sgn(c) > 0) out += "+";
    if (s == "1") {
      out += c.get_str();
    } else {
      if (c == -1) out += "-";
      else if (c != 1) out += c.get_str() + "*";
      out += s;
    }
  }
  return out.empty() ? "0" : out;
}

GradedRing GradedRing::from_json(const Json& j) {
  GradedRing r;
  try {
    r.name_ = j.at("name").get<std::string>();
    r.top_degree_ = j.at("top_degree").get<int>();
    r.full_ = j.at("full").get<bool>();
    if (j.contains("annotations"))
      for (const auto& a : j.at("annotations")) r.annotations_.push_back(a.get<std::string>());
    if (!r.full_) {
      for (const auto& [deg, b] : j.at("betti").items()) r.betti_[std::stoi(deg)] = b.get<std::size_t>();
      return r;
    }
    for (const auto& b : j.at("basis")) {
      const std::string s = b.at("symbol").get<std::string>();
      if (r.index_.count(s)) throw ParseError("duplicate basis symbol " + s);
      r.index_[s] = r.symbols_.size();
      r.symbols_.push_back(s);
      r.degrees_.push_back(b.at("degree").get<int>());
      r.betti_[r.degrees_.back()] += 1;
    }
    const std::size_t n = r.symbols_.size();
    auto combination = [&](const Json& obj) {
      std::vector<Integer> v(n);
      for (const auto& [s, c] : obj.items()) v[r.index(s)] = Integer(c.get<long>());
      return v;
    };
    r.table_.assign(n * n, std::vector<Integer>());
    std::vector<bool> seen(n * n, false);
    for (const auto& entry : j.at("products")) {
      const std::size_t a = r.index(entry.at(0).get<std::string>());
      const std::size_t b = r.index(entry.at(1).get<std::string>());
      r.table_[a * n + b] = combination(entry.at(2));
      seen[a * n + b] = true;
    }
    for (std::size_t k = 0; k < n * n; ++k)
      if (!seen[k])
        throw MissingDataError("ring " + r.name_ + " has no product for " + r.symbols_[k / n] + " * " +
                               r.symbols_[k % n]);
    r.integration_ = combination(j.at("integration"));
    if (j.contains("tangent_total_chern") && !j.at("tangent_total_chern").is_null()) {
      r.has_tangent_ = true;
      r.tangent_ = combination(j.at("tangent_total_chern"));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ring file: ") + e.what());
  }
  Verdict v = r.audit();
  if (!v.ok) throw ParseError("ring " + r.name_ + " fails its audit: " + v.failures.front());
  return r;
}

GradedRing GradedRing::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open ring file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("ring file " + path.string() + " is not valid JSON: " + e.what());
  }
  return from_json(j);
}

std::size_t GradedRing::index(const std::string& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) throw MissingDataError("ring " + name_ + " has no basis symbol '" + symbol + "'");
  return it->second;
}

std::vector<std::size_t> GradedRing::degree_basis(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < degrees_.size(); ++k)
    if (degrees_[k] == degree) out.push_back(k);
  return out;
}

std::size_t GradedRing::betti(int degree) const {
  auto it = betti_.find(degree);
  return it == betti_.end() ? 0 : it->second;
}

void GradedRing::require_full(const std::string& what) const {
  if (!full_)
    throw MissingDataError(what + ": ring " + name_ +
                           " only records Betti numbers; its multiplication is not part of the catalogue");
}

RingElement GradedRing::zero() const {
  require_full("zero");
  return RingElement(*this, std::vector<Integer>(rank()));
}

RingElement GradedRing::one() const { return element("1"); }

RingElement GradedRing::element(const std::string& symbol) const {
  require_full("element");
  std::vector<Integer> v(rank());
  v[index(symbol)] = 1;
  return RingElement(*this, std::move(v));
}

RingElement GradedRing::parse(const std::string& text) const {
  require_full("parse");
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty ring element");
  RingElement out = zero();
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw ParseError("malformed ring element '" + text + "'");
    Integer coeff = 1;
    std::string symbol = term;
    const auto star = term.find('*');
    if (star != std::string::npos) {
      if (coeff.set_str(term.substr(0, star), 10) != 0) throw ParseError("bad coefficient in '" + text + "'");
      symbol = term.substr(star + 1);
    } else if (std::all_of(term.begin(), term.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      coeff.set_str(term, 10);
      symbol = "1";
    }
    out = out + element(symbol).scaled(coeff * sign);
    pos = end;
  }
  return out;
}

const std::vector<Integer>& GradedRing::product(std::size_t i, std::size_t j) const { return table_[i * rank() + j]; }

RingElement GradedRing::multiply(const RingElement& a, const RingElement& b) const {
  require_full("multiply");
  if (&a.ring() != this || &b.ring() != this) throw PreconditionError("elements of a different ring");
  std::vector<Integer> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (sgn(b[j]) == 0) continue;
      if (degrees_[i] + degrees_[j] > top_degree_) continue;
      const Integer c = a[i] * b[j];
      const auto& p = product(i, j);
      for (std::size_t k = 0; k < rank(); ++k)
        if (sgn(p[k]) != 0) out[k] += c * p[k];
    }
  }
  return RingElement(*this, std::move(out));
}

Integer GradedRing::integrate(const RingElement& a) const {
  require_full("integrate");
  Integer s = 0;
  for (std::size_t k = 0; k < rank(); ++k) s += a[k] * integration_[k];
  return s;
}

RingElement GradedRing::tangent_total_chern() const {
  require_full("tangent_total_chern");
  if (!has_tangent_) throw MissingDataError("ring " + name_ + " records no tangent Chern class");
  return RingElement(*this, tangent_);
}

Verdict GradedRing::audit() const {
  Verdict v;
  if (!full_) return v;
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(p[k]) != 0 && degrees_[k] != degrees_[i] + degrees_[j])
          v.fail("product " + symbols_[i] + " * " + symbols_[j] + " is not homogeneous");
      if (p != product(j, i)) v.fail("product " + symbols_[i] + " * " + symbols_[j] + " is not commutative");
    }
  if (!v.ok) return v;
  const std::size_t unit = index("1");
  for (std::size_t i = 0; i < n; ++i)
    if (RingElement(*this, product(unit, i)) != element(symbols_[i])) v.fail("1 is not a unit for " + symbols_[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (degrees_[i] + degrees_[j] + degrees_[k] > top_degree_) continue;
        RingElement a = element(symbols_[i]), b = element(symbols_[j]), c = element(symbols_[k]);
        if ((a * b) * c != a * (b * c))
          v.fail("associativity fails on " + symbols_[i] + ", " + symbols_[j] + ", " + symbols_[k]);
      }
  for (int d = 0; d <= top_degree_; ++d) {
    auto lo = degree_basis(d), hi = degree_basis(top_degree_ - d);
    if (lo.size() != hi.size()) {
      v.fail("Betti numbers are not symmetric in degree " + std::to_string(d));
      continue;
    }
    if (lo.empty()) continue;
    Matrix pairing_matrix(lo.size(), hi.size());
    for (std::size_t a = 0; a < lo.size(); ++a)
      for (std::size_t b = 0; b < hi.size(); ++b)
        pairing_matrix(a, b) = Scalar(Rational(integrate(element(symbols_[lo[a]]) * element(symbols_[hi[b]]))));
    Scalar det = determinant(pairing_matrix);
    if (det != Scalar(1) && det != Scalar(-1))
      v.fail("Poincare pairing in degree " + std::to_string(d) + " is not unimodular");
  }
  return v;
}

std::filesystem::path default_catalogue_path() {
  if (const char* env = std::getenv("HODGE_LIMITS_CATALOGUE"); env && *env) return env;
  return std::filesystem::path(HODGE_DATA_DIR) / "severi.json";
}

std::filesystem::path rings_directory() { return default_catalogue_path().parent_path() / "rings"; }

GradedRing load_ring(const std::string& name) {
  static const char* known[] = {"P2", "P2xP2", "Gr26", "OP2-shell"};
  if (std::find(std::begin(known), std::end(known), name) == std::end(known))
    throw MissingDataError("unknown ring '" + name + "' (known: P2, P2xP2, Gr26, OP2-shell)");
  return GradedRing::from_file(rings_directory() / (name + ".json"));
}

ChernResult chern_hypersurface(const GradedRing& ring, const RingElement& tangent_total, const RingElement& divisor) {
  if (!ring.full()) throw MissingDataError("Chern computation needs full ring data for " + ring.name());
  if (tangent_total.part(0) != ring.one()) throw PreconditionError("total Chern class must start with 1");
  if (divisor.part(2) != divisor) throw PreconditionError("divisor class must be homogeneous of degree 2");
  if (divisor.is_zero()) return {tangent_total, 0, true};
  // (1 + D)^{-1} = sum (-D)^k, truncated at the top degree.
  RingElement inverse = ring.one();
  RingElement power = ring.one();
  for (int k = 1; 2 * k <= ring.top_degree(); ++k) {
    power = power * divisor.scaled(-1);
    inverse = inverse + power;
  }
  RingElement total = tangent_total * inverse;
  const int top_v = ring.top_degree() - 2;  // real dimension of V
  Integer euler = ring.integrate(total.part(top_v) * divisor);
  return {total, euler, false};
}

Matrix cup_matrix(const GradedRing& ring, const RingElement& divisor, int source_deg) {
  if (!ring.full()) throw MissingDataError("cup product data is missing for ring " + ring.name());
  auto src = ring.degree_basis(source_deg), dst = ring.degree_basis(source_deg + 2);
  Matrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    RingElement image = ring.element(ring.symbol(src[c])) * divisor;
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = Scalar(Rational(image[dst[r]]));
  }
  return m;
}

Subspace cup_with_divisor_image(const GradedRing& ring, const RingElement& divisor, int source_deg) {
  Matrix m = cup_matrix(ring, divisor, source_deg);
  if (m.cols() == 0) return Subspace::zero(m.rows());
  return image(m);
}

CokerRho coker_rho_rank(const GradedRing& ring, const RingElement& divisor, const FiberMiddleData& fiber) {
  if (!ring.full())
    throw MissingDataError("coker rho needs the multiplication of " + ring.name() +
                           ", which the catalogue does not record (it is only available by external citation)");
  const int d = ring.top_degree() / 2;
  auto target = ring.degree_basis(d);
  const std::size_t b = target.size();
  Subspace img = cup_with_divisor_image(ring, divisor, d - 2);
  std::vector<Vector> gens;
  for (const auto& v : img.vectors())
    for (int which = 0; which < 2; ++which) {
      Vector g(2 * b);
      for (std::size_t k = 0; k < b; ++k) g[which * b + k] = v[k];
      gens.push_back(std::move(g));
    }
  for (std::size_t k = 0; k < b; ++k) {
    Vector g(2 * b);
    g[k] = 1;
    g[b + k] = 1;
    gens.push_back(std::move(g));
  }
  Subspace span = gens.empty() ? Subspace::zero(2 * b) : Subspace::span(gens, 2 * b);
  CokerRho out{2 * b, span.dim(), 2 * b - span.dim(), ""};
  for (std::size_t k = 0; k < b; ++k) {
    Vector e(2 * b);
    e[k] = 1;
    if (!span.contains(e)) {
      out.representative = ring.symbol(target[k]) + " (x) " + fiber.lambda1;
      break;
    }
  }
  return out;
}

}  // namespace hodge
