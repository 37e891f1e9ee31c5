#include "meridian/finite_target.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "meridian/dsl.hpp"
#include "meridian/schreier.hpp"

namespace meridian {

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  std::ostringstream out;
  std::vector<bool> seen(perm.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      first = false;
      out << j + 1;
      j = static_cast<std::size_t>(perm[j]);
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

}  // namespace

void FiniteTarget::finalize() {
  const std::size_t n = names_.size();
  if (n == 0 || table_.size() != n * n) throw std::invalid_argument("bad table size");
  for (int e : table_) {
    if (e < 0 || static_cast<std::size_t>(e) >= n) {
      throw std::invalid_argument("table entry out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (mul(0, static_cast<int>(i)) != static_cast<int>(i) ||
        mul(static_cast<int>(i), 0) != static_cast<int>(i)) {
      throw std::invalid_argument("element 0 is not an identity");
    }
  }
  inverse_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mul(static_cast<int>(i), static_cast<int>(j)) == 0 &&
          mul(static_cast<int>(j), static_cast<int>(i)) == 0) {
        inverse_[i] = static_cast<int>(j);
        break;
      }
    }
    if (inverse_[i] < 0) throw std::invalid_argument("element without inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) !=
            mul(static_cast<int>(a), mul(static_cast<int>(b), static_cast<int>(c)))) {
          throw std::invalid_argument("multiplication table is not associative");
        }
      }
    }
  }
}

FiniteTarget FiniteTarget::from_table(std::string name, std::vector<std::string> element_names,
                                      std::vector<int> table) {
  FiniteTarget t;
  t.name_ = std::move(name);
  t.names_ = std::move(element_names);
  t.table_ = std::move(table);
  t.finalize();
  return t;
}

FiniteTarget FiniteTarget::from_permutations(std::string name, int degree,
                                             const std::vector<std::vector<int>>& generators) {
  if (degree < 1 || degree > 8) throw std::invalid_argument("permutation degree must be <= 8");
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(degree)) {
      throw std::invalid_argument("permutation has wrong degree");
    }
    std::vector<bool> hit(static_cast<std::size_t>(degree), false);
    for (int x : g) {
      if (x < 0 || x >= degree || hit[static_cast<std::size_t>(x)]) {
        throw std::invalid_argument("not a permutation");
      }
      hit[static_cast<std::size_t>(x)] = true;
    }
  }
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      out[x] = b[static_cast<std::size_t>(a[x])];
    }
    return out;
  };

  std::vector<int> identity(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) identity[static_cast<std::size_t>(x)] = x;

  std::vector<std::vector<int>> elements{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      std::vector<int> p = compose(elements[head], g);
      if (index.emplace(p, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(p));
        if (elements.size() > 40320) throw std::invalid_argument("closure too large");
      }
    }
  }

  const std::size_t n = elements.size();
  std::vector<int> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = index.at(compose(elements[i], elements[j]));
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elements) names.push_back(cycle_notation(p));
  return from_table(std::move(name), std::move(names), std::move(table));
}

FiniteTarget FiniteTarget::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic order must be positive");
  std::vector<std::string> names;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    }
  }
  return from_table("Z" + std::to_string(n), std::move(names), std::move(table));
}

FiniteTarget FiniteTarget::symmetric(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("symmetric degree out of range");
  std::vector<int> swap01(static_cast<std::size_t>(n));
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    swap01[static_cast<std::size_t>(x)] = x;
    cycle[static_cast<std::size_t>(x)] = (x + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return from_permutations("S" + std::to_string(n), n, {swap01, cycle});
}

FiniteTarget FiniteTarget::quaternion8() {
  // Elements s * axis with axis in {1, i, j, k}: index = 2*axis + (s < 0).
  auto idx = [](int axis, int neg) { return 2 * axis + neg; };
  // axis products: axis_mul[a][b] = (axis, extra sign)
  static constexpr int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  std::vector<int> table(64);
  for (int a = 0; a < 4; ++a) {
    for (int na = 0; na < 2; ++na) {
      for (int b = 0; b < 4; ++b) {
        for (int nb = 0; nb < 2; ++nb) {
          const int axis = axis_mul[a][b];
          int sign = sign_mul[a][b];
          if (na) sign = -sign;
          if (nb) sign = -sign;
          table[static_cast<std::size_t>(idx(a, na)) * 8 + idx(b, nb)] = idx(axis, sign < 0);
        }
      }
    }
  }
  return from_table("Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, std::move(table));
}

FiniteTarget FiniteTarget::dicyclic12() {
  // Elements x^a y^b with x^6 = 1, y^2 = x^3, y^-1 x y = x^-1; index = a + 6b.
  auto idx = [](int a, int b) { return a + 6 * b; };
  std::vector<int> table(144);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 6; ++c) {
        for (int d = 0; d < 2; ++d) {
          int ra, rb;
          if (b == 0) {
            ra = (a + c) % 6;
            rb = d;
          } else if (d == 0) {
            ra = ((a - c) % 6 + 6) % 6;
            rb = 1;
          } else {
            ra = ((a - c + 3) % 6 + 6) % 6;
            rb = 0;
          }
          table[static_cast<std::size_t>(idx(a, b)) * 12 + idx(c, d)] = idx(ra, rb);
        }
      }
    }
  }
  std::vector<std::string> names(12);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 2; ++b) {
      std::string n = a == 0 ? "" : (a == 1 ? "x" : "x^" + std::to_string(a));
      if (b == 1) n += n.empty() ? "y" : "*y";
      if (n.empty()) n = "1";
      names[static_cast<std::size_t>(idx(a, b))] = std::move(n);
    }
  }
  return from_table("Dic12", std::move(names), std::move(table));
}

FiniteTarget FiniteTarget::direct_product(const FiniteTarget& a, const FiniteTarget& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < b.order(); ++j) {
      names.push_back("(" + a.element_name(static_cast<int>(i)) + "," +
                      b.element_name(static_cast<int>(j)) + ")");
    }
  }
  std::vector<int> table(n * n);
  const auto nb = static_cast<int>(b.order());
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const int pa = static_cast<int>(p) / nb, pb = static_cast<int>(p) % nb;
      const int qa = static_cast<int>(q) / nb, qb = static_cast<int>(q) % nb;
      table[p * n + q] = a.mul(pa, qa) * nb + b.mul(pb, qb);
    }
  }
  return from_table(a.name() + "x" + b.name(), std::move(names), std::move(table));
}

const std::vector<FiniteTarget>& FiniteTarget::builtins() {
  static const std::vector<FiniteTarget> targets = [] {
    std::vector<FiniteTarget> t;
    t.push_back(symmetric(3));
    t.push_back(symmetric(4));
    t.push_back(dicyclic12());
    t.push_back(quaternion8());
    for (int n = 2; n <= 12; ++n) t.push_back(cyclic(n));
    return t;
  }();
  return targets;
}

std::optional<FiniteTarget> FiniteTarget::by_name(std::string_view name) {
  std::string lowered(name);
  for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const FiniteTarget& t : builtins()) {
    std::string tn = t.name();
    for (char& c : tn) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (tn == lowered) return t;
  }
  if (lowered == "z1") return cyclic(1);
  return std::nullopt;
}

FiniteTarget regular_representation(std::string name, const Presentation& p,
                                    const CosetTable& table) {
  if (!table.complete()) throw std::invalid_argument("coset table must be complete");
  const SchreierData s = schreier_transversal(table);
  const std::size_t n = table.coset_count();
  std::vector<int> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = table.trace(i, s.transversal[j]);
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (const Word& w : s.transversal) {
    names.push_back(w.empty() ? "e" : format_word(w, p.generators()));
  }
  return FiniteTarget::from_table(std::move(name), std::move(names), std::move(mul));
}

}  // namespace meridian
