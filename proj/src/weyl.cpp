#include "hodge/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

using Cartan = std::vector<std::vector<int>>;

Cartan from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  Cartan c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  for (auto [a, b] : edges) c[a - 1][b - 1] = c[b - 1][a - 1] = -1;
  return c;
}

Cartan simple_factor(const std::string& id) {
  if (id.size() < 2) throw ParseError("unknown root system '" + id + "'");
  const char type = id[0];
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(id.substr(1), &used);
    if (used != id.size() - 1) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("unknown root system '" + id + "'");
  }
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case 'A':
      if (n < 1) break;
      for (int k = 1; k < n; ++k) edges.push_back({k, k + 1});
      return from_edges(n, edges);
    case 'D':
      if (n < 4) break;
      for (int k = 1; k < n - 1; ++k) edges.push_back({k, k + 1});
      edges.push_back({n - 2, n});
      return from_edges(n, edges);
    case 'E':
      if (n < 6 || n > 8) break;
      edges = {{1, 3}, {3, 4}, {2, 4}, {4, 5}};
      for (int k = 5; k < n; ++k) edges.push_back({k, k + 1});
      return from_edges(n, edges);
    default:
      break;
  }
  throw ParseError("unsupported root system '" + id + "' (simply-laced A, D, E only)");
}

int pair_with_coroot(const Cartan& c, const std::vector<int>& beta, std::size_t i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * c[j][i];
  return s;
}

}  // namespace

RootSystem RootSystem::parse(const std::string& id) {
  RootSystem rs;
  rs.id_ = id;
  std::vector<Cartan> factors;
  std::size_t start = 0;
  while (start <= id.size()) {
    std::size_t x = id.find('x', start);
    std::string part = id.substr(start, x == std::string::npos ? std::string::npos : x - start);
    factors.push_back(simple_factor(part));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  std::size_t n = 0;
  for (const auto& f : factors) n += f.size();
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  std::size_t off = 0;
  for (const auto& f : factors) {
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) rs.cartan_[off + i][off + j] = f[i][j];
    off += f.size();
  }

  // Root strings: beta + alpha_i is a root iff q - <beta, alpha_i> > 0, where
  // q is the length of the alpha_i-string below beta.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> beta = queue.front();
    queue.pop_front();
    rs.positive_.push_back(beta);
    for (std::size_t i = 0; i < n; ++i) {
      int q = 0;
      std::vector<int> down = beta;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++q;
      }
      if (q - pair_with_coroot(rs.cartan_, beta, i) > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (seen.insert(up).second) queue.push_back(up);
      }
    }
  }
  return rs;
}

std::vector<int> parse_weight(const RootSystem& rs, const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  std::vector<int> out(rs.rank(), 0);
  if (text.empty()) throw ParseError("empty weight");
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed weight '" + raw + "'");
    return std::stoi(s);
  };
  if (text.find('w') == std::string::npos) {
    std::size_t k = 0, start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      if (k >= out.size()) throw ParseError("weight '" + raw + "' has too many coordinates");
      std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!item.empty() && item[0] == '-') throw PreconditionError("weight '" + raw + "' is not dominant");
      out[k++] = number(item);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (k != out.size()) throw ParseError("weight '" + raw + "' needs " + std::to_string(out.size()) + " coordinates");
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = text.find_first_of("+-", pos);
    std::string term = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::size_t w = term.find('w');
    if (w == std::string::npos) throw ParseError("malformed weight '" + raw + "'");
    int coeff = w == 0 ? 1 : number(term.substr(0, w));
    int idx = number(term.substr(w + 1));
    if (idx < 1 || static_cast<std::size_t>(idx) > out.size())
      throw ParseError("fundamental weight index out of range in '" + raw + "'");
    out[idx - 1] += sign * coeff;
    pos = end == std::string::npos ? text.size() : end;
  }
  for (int c : out)
    if (c < 0) throw PreconditionError("weight '" + raw + "' is not dominant");
  return out;
}

Integer rep_dimension(const RootSystem& rs, const std::vector<int>& lambda) {
  if (lambda.size() != rs.rank()) throw DimensionError("weight has the wrong number of coordinates");
  for (int c : lambda)
    if (c < 0) throw PreconditionError("highest weight is not dominant");
  // Simply laced, so coroots and roots have the same coordinates and
  // <w_j, alpha^vee> is the j-th coordinate of alpha.
  Rational dim(1);
  for (const auto& alpha : rs.positive_roots()) {
    long num = 0, den = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      num += static_cast<long>(alpha[j]) * (lambda[j] + 1);
      den += alpha[j];
    }
    Rational factor{Integer(num), Integer(den)};
    factor.canonicalize();
    dim *= factor;
  }
  dim.canonicalize();
  if (dim.get_den() != 1) throw Error("Weyl dimension formula produced a non-integer");
  return dim.get_num();
}

Integer rep_dimension(const std::string& group, const std::string& weight) {
  RootSystem rs = RootSystem::parse(group);
  return rep_dimension(rs, parse_weight(rs, weight));
}

}  // namespace hodge
