#include "bbgroups/facering.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "bbgroups/error.hpp"

namespace bbgroups {

  FaceMonomial make_monomial(std::vector<Vertex> vertices,
                             std::int64_t        coefficient,
                             FlagComplex const&  complex) {
    if (coefficient == 0) {
      return {};
    }
    // Insertion sort, counting transpositions.
    bool odd = false;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      for (std::size_t j = i; j > 0 && vertices[j - 1] > vertices[j]; --j) {
        std::swap(vertices[j - 1], vertices[j]);
        odd = !odd;
      }
    }
    if (std::adjacent_find(vertices.begin(), vertices.end())
            != vertices.end()
        || !complex.spans_simplex(vertices)) {
      return {};
    }
    return {std::move(vertices), odd ? -coefficient : coefficient};
  }

  FaceMonomial monomial_product(FaceMonomial const& a,
                                FaceMonomial const& b,
                                FlagComplex const&  complex) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<Vertex> merged = a.vertices;
    merged.insert(merged.end(), b.vertices.begin(), b.vertices.end());
    return make_monomial(std::move(merged), a.coefficient * b.coefficient,
                         complex);
  }

  std::vector<std::size_t> hilbert_series(FlagComplex const& complex) {
    if (!complex.fully_enumerated()) {
      throw DomainError("Hilbert series of a truncated clique enumeration");
    }
    std::vector<std::size_t> h{1};
    for (auto f : complex.f_vector()) {
      h.push_back(f);
    }
    return h;
  }

  std::int64_t group_euler_characteristic(FlagComplex const& complex) {
    return 1 - euler_characteristic(complex);
  }

  std::string to_string(TriState t) {
    switch (t) {
      case TriState::yes:
        return "yes";
      case TriState::no:
        return "no";
      case TriState::unknown:
        break;
    }
    return "unknown";
  }

  FinitenessReport finiteness_report(FlagComplex const& complex,
                                     std::size_t        budget) {
    if (complex.num_vertices() == 0) {
      throw DomainError("the kernel is only defined for a nonempty complex");
    }
    FinitenessReport r;
    r.chi_delta          = euler_characteristic(complex);
    r.chi_group          = group_euler_characteristic(complex);
    r.reduced_homology   = homology(complex, true).groups;
    r.finitely_generated = complex.is_connected();

    r.reasons.emplace_back(
        "finitely_generated",
        "Bestvina-Brady: H is finitely generated iff the complex is connected");

    if (!r.finitely_generated) {
      r.finitely_presented = TriState::no;
      r.reasons.emplace_back("finitely_presented",
                             "not finitely generated, so not finitely "
                             "presented");
    } else {
      r.simple_connectivity = simply_connected_status(complex, budget);
      switch (r.simple_connectivity) {
        case SimpleConnectivity::certified_trivial:
          r.finitely_presented = TriState::yes;
          r.reasons.emplace_back(
              "finitely_presented",
              "Bestvina-Brady: finitely presented iff simply connected; "
              "simple connectivity certified by Tietze reduction of the "
              "edge-path group to the trivial presentation");
          break;
        case SimpleConnectivity::certified_nontrivial:
          r.finitely_presented = TriState::no;
          r.reasons.emplace_back(
              "finitely_presented",
              "Bestvina-Brady: finitely presented iff simply connected; "
              "H_1 of the complex is nonzero");
          break;
        case SimpleConnectivity::unknown:
          r.finitely_presented = TriState::unknown;
          r.reasons.emplace_back(
              "finitely_presented",
              "Bestvina-Brady: finitely presented iff simply connected; "
              "H_1 vanishes but the Tietze budget did not certify a trivial "
              "fundamental group");
          break;
      }
    }

    for (std::size_t k = 0; k < r.reduced_homology.size(); ++k) {
      if (!r.reduced_homology[k].is_zero()) {
        r.fp_level = k;
        break;
      }
    }
    r.reasons.emplace_back(
        "fp_level",
        r.fp_level
            ? "Bestvina-Brady: type FP(n) iff reduced homology vanishes in "
              "degrees below n; first nonvanishing degree is "
                  + std::to_string(*r.fp_level)
            : std::string("Bestvina-Brady: all reduced homology vanishes "
                          "(acyclic), so H is of type FP"));

    r.reasons.emplace_back("chi_group",
                           "Droms: chi(G) = 1 - chi(complex)");
    r.corollary6_obstruction = r.chi_delta != 1;
    r.reasons.emplace_back(
        "corollary6_obstruction",
        r.corollary6_obstruction
            ? "chi(complex) != 1, so the rational cohomology of H is "
              "infinite dimensional (Stallings' HNN Mayer-Vietoris argument)"
            : "chi(complex) = 1 is necessary, not sufficient, for finite "
              "dimensional rational cohomology of H; nothing concluded");

    r.corollary7_applies
        = r.finitely_generated
          && r.simple_connectivity == SimpleConnectivity::certified_trivial
          && r.chi_delta != 1;
    r.reasons.emplace_back(
        "corollary7_applies",
        r.corollary7_applies
            ? "connected, simply connected and chi != 1: H is finitely "
              "presented but not of type FP"
            : "needs a connected, certified simply connected complex with "
              "chi != 1");
    return r;
  }

  namespace {

    std::string homology_string(HomologyGroup const& g) {
      std::string out;
      if (g.betti > 0) {
        out = g.betti == 1 ? "Z" : "Z^" + std::to_string(g.betti);
      }
      for (auto const& t : g.torsion) {
        out += (out.empty() ? "" : " + ") + std::string("Z/")
               + t.str();
      }
      return out.empty() ? "0" : out;
    }

    std::string reason_for(FinitenessReport const& r, std::string const& key) {
      for (auto const& [k, v] : r.reasons) {
        if (k == key) {
          return v;
        }
      }
      return {};
    }

    std::string fp_string(FinitenessReport const& r) {
      return r.fp_level ? std::to_string(*r.fp_level) : "infinity";
    }

  }  // namespace

  std::string to_text(FinitenessReport const& r) {
    std::ostringstream out;
    out << "finitely_generated: " << (r.finitely_generated ? "yes" : "no")
        << "\n  " << reason_for(r, "finitely_generated") << '\n';
    out << "finitely_presented: " << to_string(r.finitely_presented)
        << "\n  " << reason_for(r, "finitely_presented") << '\n';
    out << "fp_level: " << fp_string(r);
    if (r.fp_level) {
      out << " (type FP(" << *r.fp_level << "), not FP(" << *r.fp_level + 1
          << "))";
    } else {
      out << " (type FP)";
    }
    out << "\n  " << reason_for(r, "fp_level") << '\n';
    out << "chi_delta: " << r.chi_delta << '\n';
    out << "chi_group: " << r.chi_group << "\n  " << reason_for(r, "chi_group")
        << '\n';
    out << "corollary6_obstruction: "
        << (r.corollary6_obstruction ? "yes" : "no") << "\n  "
        << reason_for(r, "corollary6_obstruction") << '\n';
    out << "corollary7_applies: " << (r.corollary7_applies ? "yes" : "no")
        << "\n  " << reason_for(r, "corollary7_applies") << '\n';
    out << "reduced_homology:";
    for (std::size_t k = 0; k < r.reduced_homology.size(); ++k) {
      out << ' ' << 'H' << k << '=' << homology_string(r.reduced_homology[k]);
    }
    out << '\n';
    return out.str();
  }

  std::string to_json(FinitenessReport const& r) {
    nlohmann::ordered_json j;
    j["finitely_generated"] = r.finitely_generated;
    j["finitely_presented"] = to_string(r.finitely_presented);
    if (r.fp_level) {
      j["fp_level"] = *r.fp_level;
    } else {
      j["fp_level"] = "infinity";
    }
    j["chi_delta"]              = r.chi_delta;
    j["chi_group"]              = r.chi_group;
    j["corollary6_obstruction"] = r.corollary6_obstruction;
    j["corollary7_applies"]     = r.corollary7_applies;
    j["reduced_homology"]       = nlohmann::ordered_json::array();
    for (auto const& g : r.reduced_homology) {
      nlohmann::ordered_json h;
      h["betti"]   = g.betti;
      h["torsion"] = nlohmann::ordered_json::array();
      for (auto const& t : g.torsion) {
        h["torsion"].push_back(t.str());
      }
      j["reduced_homology"].push_back(h);
    }
    j["reasons"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : r.reasons) {
      j["reasons"][k] = v;
    }
    return j.dump(2) + "\n";
  }

}  // namespace bbgroups
