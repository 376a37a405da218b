#include "ustar/render.hpp"

#include <sstream>

#include "ustar/config.hpp"

namespace ustar {

namespace {

std::string ppower_string(const PrimePower& v) {
  std::string s = v.str();
  if (const auto small = v.small_value()) s += " (= " + std::to_string(*small) + ")";
  return s;
}

std::string tuple_string(const ExponentTuple& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::string int_vector_string(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<std::int64_t> padded(std::vector<std::int64_t> f, std::int64_t max_i) {
  while (max_i > 0 && static_cast<std::int64_t>(f.size()) < max_i) f.push_back(0);
  return f;
}

nlohmann::ordered_json basis_to_json(const DiagonalForm& d,
                                     const std::vector<BasisElement>& basis) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BasisElement& b : basis) {
    nlohmann::ordered_json e;
    e["alpha"] = b.index.alpha;
    e["class"] = label_name(b.index.label);
    e["weight"] = b.index.weight;
    e["head"] = b.index.head;
    e["order"] = b.order.str();
    e["element"] = element_sparse_json(b.element);
    e["element_original"] = element_sparse_json(to_original_coordinates(d, b.element));
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace

std::string monomial_string(const GroupSpec& g, const ExponentTuple& c,
                            const std::string& letter) {
  std::string s;
  for (int j = 0; j < g.rank(); ++j) {
    const std::int64_t e = c[static_cast<std::size_t>(j)];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += letter + std::to_string(j + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string element_string(const AlgebraElement& x, const std::string& letter) {
  const GroupSpec& g = x.group();
  std::string s;
  for (std::int64_t i = 0; i < g.size(); ++i) {
    const std::int64_t v = x.coefficients()[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (!s.empty()) s += " + ";
    const std::string mono = monomial_string(g, g.element_at(i), letter);
    if (mono == "1")
      s += std::to_string(v);
    else if (v == 1)
      s += mono;
    else
      s += std::to_string(v) + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

nlohmann::ordered_json element_sparse_json(const AlgebraElement& x) {
  const GroupSpec& g = x.group();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::int64_t i = 0; i < g.size(); ++i) {
    const std::int64_t v = x.coefficients()[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    nlohmann::ordered_json term;
    term["exponents"] = g.element_at(i);
    term["coeff"] = v;
    arr.push_back(std::move(term));
  }
  return arr;
}

nlohmann::ordered_json report_to_json(const StructureReport& r, bool include_bases,
                                      std::int64_t max_i) {
  const DiagonalForm& d = r.diagonal;
  nlohmann::ordered_json j;
  j["p"] = d.original_group().p();
  j["orders"] = d.original_group().orders();
  j["involution"] = render_involution(d.involution());
  j["l"] = d.inverted_count();
  j["t"] = d.rank();
  j["diagonal_orders"] = d.group().orders();
  j["group_size"] = d.group().size();
  j["fixed_subgroup_size"] = d.fixed_subgroup_size();
  j["order_V"] = r.order_V.str();
  j["order_symmetric"] = r.order_symmetric.str();
  j["order_unitary"] = r.order_unitary.str();
  j["rank_symmetric"] = r.rank_symmetric;
  j["rank_unitary"] = r.rank_unitary;
  j["f_symmetric"] = padded(r.f_symmetric, max_i);
  j["f_unitary"] = padded(r.f_unitary, max_i);
  if (include_bases) {
    j["unitary_basis"] = basis_to_json(d, r.unitary_basis);
    j["symmetric_basis"] = basis_to_json(d, r.symmetric_basis);
  }
  return j;
}

std::string report_to_text(const StructureReport& r, bool include_bases,
                           std::int64_t max_i) {
  const DiagonalForm& d = r.diagonal;
  std::ostringstream out;
  out << "p = " << d.original_group().p() << ", G = " << d.original_group().describe()
      << ", involution: " << render_involution(d.involution()) << "\n";
  out << "diagonal form: " << d.inverted_count() << " inverted of " << d.rank()
      << " generators, orders " << int_vector_string(d.group().orders()) << "\n";
  out << "|G| = " << d.group().size() << ", |G_eta| = " << d.fixed_subgroup_size() << "\n";
  out << "|V(FG)|   = " << ppower_string(r.order_V) << "\n";
  out << "|S_*(FG)| = " << ppower_string(r.order_symmetric) << "   p-rank "
      << r.rank_symmetric << "   f = " << int_vector_string(padded(r.f_symmetric, max_i))
      << "\n";
  out << "|V_*(FG)| = " << ppower_string(r.order_unitary) << "   p-rank "
      << r.rank_unitary << "   f = " << int_vector_string(padded(r.f_unitary, max_i))
      << "\n";
  if (include_bases) {
    auto print_basis = [&](const char* title, const std::vector<BasisElement>& basis) {
      out << title << " (" << basis.size() << " elements):\n";
      if (basis.empty()) out << "  (none: the subgroup is trivial)\n";
      for (const BasisElement& b : basis) {
        out << "  alpha=" << tuple_string(b.index.alpha) << " class="
            << label_name(b.index.label) << " order=" << b.order.str() << "\n";
        out << "    diagonal:  " << element_string(b.element, "b") << "\n";
        out << "    original:  " << element_string(to_original_coordinates(d, b.element), "a")
            << "\n";
      }
    };
    print_basis("unitary basis", r.unitary_basis);
    print_basis("symmetric basis", r.symmetric_basis);
  }
  return out.str();
}

nlohmann::ordered_json diagonal_form_to_json(const DiagonalForm& d) {
  nlohmann::ordered_json j;
  j["p"] = d.original_group().p();
  j["orders"] = d.original_group().orders();
  j["involution"] = render_involution(d.involution());
  j["l"] = d.inverted_count();
  j["t"] = d.rank();
  j["diagonal_orders"] = d.group().orders();
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (int i = 0; i < d.rank(); ++i) {
    nlohmann::ordered_json e;
    e["exponents"] = d.generators_in_original()[static_cast<std::size_t>(i)];
    e["order"] = d.group().orders()[static_cast<std::size_t>(i)];
    e["action"] = i < d.inverted_count() ? "inverted" : "fixed";
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);
  j["original_in_diagonal"] = d.original_in_diagonal();
  std::vector<std::int64_t> gp, hp;
  const std::int64_t top =
      static_cast<std::int64_t>(symmetric_invariants(d).size()) + 1;
  for (std::int64_t i = 0; i <= top; ++i) {
    gp.push_back(d.power_subgroup_size(i));
    hp.push_back(d.fixed_power_subgroup_size(i));
  }
  j["power_subgroup_sizes"] = gp;
  j["fixed_power_subgroup_sizes"] = hp;
  return j;
}

std::string diagonal_form_to_text(const DiagonalForm& d) {
  std::ostringstream out;
  out << "p = " << d.original_group().p() << ", G = " << d.original_group().describe()
      << ", involution: " << render_involution(d.involution()) << "\n";
  out << "l = " << d.inverted_count() << " inverted of t = " << d.rank()
      << " generators; diagonal orders " << int_vector_string(d.group().orders()) << "\n";
  for (int i = 0; i < d.rank(); ++i) {
    const std::string b = "b" + std::to_string(i + 1);
    out << "  " << b << " = "
        << monomial_string(d.original_group(),
                           d.generators_in_original()[static_cast<std::size_t>(i)], "a")
        << "   eta(" << b << ") = " << b
        << (i < d.inverted_count() ? "^-1" : "") << "   order "
        << d.group().orders()[static_cast<std::size_t>(i)] << "\n";
  }
  out << "original generators in the diagonal basis:\n";
  for (int j = 0; j < d.original_group().rank(); ++j)
    out << "  a" << (j + 1) << " = "
        << monomial_string(d.group(), d.original_in_diagonal()[static_cast<std::size_t>(j)],
                           "b")
        << "\n";
  out << "|G_eta| = " << d.fixed_subgroup_size() << " of |G| = " << d.group().size()
      << "\n";
  return out.str();
}

nlohmann::ordered_json checks_to_json(const DiagonalForm& d,
                                      const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json j;
  j["p"] = d.original_group().p();
  j["orders"] = d.original_group().orders();
  j["involution"] = render_involution(d.involution());
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::int64_t pass = 0, fail = 0, skip = 0;
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
    switch (c.status) {
      case CheckResult::Status::Pass: ++pass; break;
      case CheckResult::Status::Fail: ++fail; break;
      case CheckResult::Status::Skip: ++skip; break;
    }
  }
  j["checks"] = std::move(arr);
  j["passed"] = pass;
  j["failed"] = fail;
  j["skipped"] = skip;
  j["all_pass"] = fail == 0;
  return j;
}

std::string checks_to_text(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  std::int64_t pass = 0, fail = 0, skip = 0;
  for (const CheckResult& c : checks) {
    std::string tag;
    switch (c.status) {
      case CheckResult::Status::Pass: tag = "PASS"; ++pass; break;
      case CheckResult::Status::Fail: tag = "FAIL"; ++fail; break;
      case CheckResult::Status::Skip: tag = "SKIP"; ++skip; break;
    }
    out << tag << "  " << c.name;
    for (std::size_t i = c.name.size(); i < 26; ++i) out << ' ';
    out << c.detail << "\n";
  }
  out << "summary: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return out.str();
}

}  // namespace ustar
