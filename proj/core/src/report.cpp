#include "gemkit/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace gemkit {

using nlohmann::json;

bool AnalysisReport::all_pass() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.pass; });
}

void add_certificate(AnalysisReport& report, std::string name, bool pass) {
  report.certificates.push_back({std::move(name), pass});
}

namespace {

template <class T, class F>
void evaluate(Outcome<T>& out, F&& f) {
  try {
    out.value = f();
  } catch (const Error& e) {
    out.error = SectionError{std::string(to_string(e.code())), e.what()};
  }
}

bool boundary_squared_zero(const PseudoComplex& cx) {
  for (int k = 2; k <= cx.dimension(); ++k) {
    const auto lower = boundary_matrix(cx, k - 1);
    const auto upper = boundary_matrix(cx, k);
    if (lower.cols() == 0 || upper.cols() == 0) continue;
    if (!(lower * upper).is_zero()) return false;
  }
  return true;
}

std::string mask_key(ColorSet s) {
  std::string out;
  for (Color c : s.colors()) out += std::to_string(c);
  return out;
}

}  // namespace

AnalysisReport build_report(const GraphDocument& doc, const ReportRequest& req) {
  const ColoredGraph g = doc.graph();
  const unsigned want = req.section_mask;
  AnalysisReport r;
  r.name = doc.name;
  r.hash = graph_hash(g);
  r.dimension = g.dimension();
  r.vertices = g.vertex_count();
  r.edge_count = static_cast<int>(g.edges().size());
  r.regularity = regularity_class(g);
  r.contracted = is_contracted(g);
  r.bipartite = is_bipartite(g);
  r.connected = is_connected(g);
  const GProfile profile = g_profile(g);
  for (std::uint32_t mask = 1; mask < ColorSet::all(g.dimension()).bits(); ++mask) {
    const ColorSet s(mask);
    if (s.size() == 2) r.g_pairs.emplace_back(s, profile.count(s));
    if (s.size() == 3) r.g_triples.emplace_back(s, profile.count(s));
  }
  auto lexicographic = [](const auto& a, const auto& b) { return a.first.colors() < b.first.colors(); };
  std::sort(r.g_pairs.begin(), r.g_pairs.end(), lexicographic);
  std::sort(r.g_triples.begin(), r.g_triples.end(), lexicographic);

  const std::optional<GraphMetadata>& meta = doc.metadata;
  std::optional<int> m = req.m;
  std::optional<int> m_prime = req.m_prime;
  if (meta && !m) m = meta->m;
  if (meta && !m_prime) m_prime = meta->m_prime;

  if (want & (sections::kHomology | sections::kLemma | sections::kDecomposition)) {
    evaluate(r.homology, [&] {
      const auto cx = build_complex(g);
      r.f_vector = cx.f_vector();
      r.euler = euler_characteristic(cx);
      auto h = homology(cx);
      add_certificate(r, "boundary_squared_zero", boundary_squared_zero(cx));
      add_certificate(r, "euler_matches_betti", *r.euler == h.betti_euler());
      if (meta && meta->certified_betti) add_certificate(r, "certified_betti", h.betti == *meta->certified_betti);
      return h;
    });
  }

  if (want & sections::kGenus) {
    evaluate(r.genus, [&] {
      auto report = regular_genus(g, req.workers);
      bool agree = true;
      for (const auto& row : report.table) agree = agree && face_trace_oracle(g, row.eps) == row.chi;
      add_certificate(r, "chi_epsilon_equals_face_trace", agree);
      if (meta && meta->certified_regular_genus)
        add_certificate(r, "certified_regular_genus", report.minimum == *meta->certified_regular_genus);
      return report;
    });
  }

  if (want & (sections::kClassification | sections::kIdentities)) {
    evaluate(r.classification, [&] { return classify(g, req.workers); });
  }

  if (want & sections::kIdentities) {
    if (r.classification.error) {
      r.identities.error = r.classification.error;
    } else {
      evaluate(r.identities, [&] {
        auto id = r.classification.value->closed_candidate() ? verify_identities_closed(g)
                                                              : verify_identities_singular(g);
        add_certificate(r, "identities_hold", id.all_hold());
        return id;
      });
    }
  }

  SemiSimpleMode::Kind mode = SemiSimpleMode::Kind::Closed;
  if (req.mode)
    mode = *req.mode;
  else if (r.classification.value && !r.classification.value->closed_candidate())
    mode = SemiSimpleMode::Kind::Boundary;
  const bool boundary = mode == SemiSimpleMode::Kind::Boundary;

  if (want & (sections::kSemiSimple | sections::kDecomposition)) {
    if (!m) {
      r.semisimple.not_applicable = "rank m not supplied";
    } else if (boundary && !m_prime) {
      r.semisimple.error = SectionError{std::string(to_string(ErrorCode::MissingContext)), "boundary mode needs m'"};
    } else {
      evaluate(r.semisimple, [&] {
        auto v = check_semisimple(g, boundary ? SemiSimpleMode::boundary(*m, *m_prime) : SemiSimpleMode::closed(*m));
        add_certificate(r, "semisimple", v.pass);
        return v;
      });
    }
  }

  if (want & sections::kLemma) {
    if (!m) {
      r.lemma.not_applicable = "rank m not supplied";
    } else if (!r.homology.value) {
      r.lemma.error = r.homology.error;
    } else if (r.semisimple.value && !r.semisimple.value->pass) {
      r.lemma.not_applicable = "graph is not semi-simple";
    } else {
      try {
        RelationReport rel;
        if (boundary) {
          rel = lemma_gcount_boundary(g, BettiContext::boundary(*r.homology.value, *m, m_prime));
        } else {
          rel = lemma_gcount_closed(g, BettiContext::closed(*r.homology.value, *m));
        }
        add_certificate(r, "lemma_relations", rel.all_hold());
        r.lemma.value = std::move(rel);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NotSemiSimple || e.code() == ErrorCode::NotBipartite)
          r.lemma.not_applicable = e.what();
        else
          r.lemma.error = SectionError{std::string(to_string(e.code())), e.what()};
      }
    }
  }

  if (want & sections::kDecomposition) {
    const bool semisimple = r.semisimple.value && r.semisimple.value->pass;
    if (!r.homology.value) {
      r.decomposition.not_applicable = "homology unavailable";
    } else if (!m || !semisimple) {
      r.decomposition.not_applicable = "needs a semi-simple crystallization with declared rank";
    } else if (!boundary && (*m != 1 || r.homology.value->betti.at(1) != 1)) {
      r.decomposition.not_applicable = "closed predictions need m = beta1 = 1";
    } else if (boundary && (*m != 1 || m_prime.value_or(-1) != 1)) {
      r.decomposition.not_applicable = "boundary predictions need m = m' = 1";
    } else {
      const int beta2 = r.homology.value->betti.at(2);
      auto d = boundary ? predict_boundary(beta2) : predict_closed(beta2);
      bool chi_ok = d.chi_certificate;
      if (!boundary)
        for (const auto& v : d.variants) chi_ok = chi_ok && chi_consistency(v.handles, *r.euler);
      add_certificate(r, "decomposition_chi", chi_ok);
      r.decomposition.value = std::move(d);
    }
  }
  return r;
}

// ----------------------------------------------------------- serializers

namespace {

json rational_json(const Rational& q) { return json{{"num", q.numerator()}, {"den", q.denominator()}}; }

json bigint_json(const BigInt& x) {
  if (x >= BigInt(std::numeric_limits<long long>::min()) && x <= BigInt(std::numeric_limits<long long>::max()))
    return json(static_cast<long long>(x));
  return json(x.str());
}

json colors_json(ColorSet s) { return json(s.colors()); }

json homology_json(const HomologyProfile& h) {
  json torsion = json::array();
  for (const auto& row : h.torsion) {
    json t = json::array();
    for (const auto& x : row) t.push_back(bigint_json(x));
    torsion.push_back(t);
  }
  return json{{"betti", h.betti}, {"torsion", torsion}, {"torsion_free", h.torsion_free()}};
}

json genus_json(const GenusReport& gr) {
  json table = json::array();
  for (const auto& row : gr.table)
    table.push_back(json{{"order", row.eps.order()}, {"chi", row.chi}, {"rho", rational_json(row.rho)}});
  json argmin = json::array();
  for (const auto& eps : gr.argmin) argmin.push_back(eps.order());
  return json{{"table", table}, {"regular_genus", rational_json(gr.minimum)}, {"argmin", argmin}};
}

json classification_json(const Classification& c) {
  json verdicts = json::array();
  for (auto v : c.verdicts) verdicts.push_back(to_string(v));
  json residues = json::array();
  for (const auto& per_color : c.residue_homology) {
    json comps = json::array();
    for (const auto& h : per_color) comps.push_back(homology_json(h));
    residues.push_back(comps);
  }
  return json{{"verdicts", verdicts},
              {"residue_homology", residues},
              {"singular_colors", colors_json(c.singular_colors)},
              {"closed_candidate", c.closed_candidate()},
              {"contracted", c.contracted},
              {"bipartite", c.bipartite},
              {"homology_level_only", c.homology_level_only}};
}

json check_json(const IdentityCheck& c) {
  json j{{"name", c.name}, {"lhs", rational_json(c.lhs)}, {"rhs", rational_json(c.rhs)}, {"holds", c.holds()}};
  if (c.j >= 0) j["j"] = c.j;
  return j;
}

json identities_json(const IdentityReport& id) {
  json eq1 = json::array(), eq2 = json::array(), hats = json::array();
  for (const auto& c : id.eq1) eq1.push_back(check_json(c));
  for (const auto& c : id.eq2) eq2.push_back(check_json(c));
  for (const auto& q : id.rho_hat) hats.push_back(rational_json(q));
  return json{{"singular_mode", id.singular_mode},
              {"relabeling", id.relabeling},
              {"order", CyclicPermutation::identity(4).order()},
              {"rho", rational_json(id.rho)},
              {"rho_hat", hats},
              {"regular_genus", rational_json(id.regular_genus)},
              {"order_attains_minimum", id.order_attains_minimum},
              {"euler", id.euler},
              {"eq1", eq1},
              {"eq2", eq2},
              {"eq3", check_json(id.eq3)},
              {"all_hold", id.all_hold()}};
}

json counts_json(const std::vector<CountCheck>& rows) {
  json out = json::array();
  for (const auto& c : rows)
    out.push_back(json{{"colors", colors_json(c.colors)}, {"observed", c.observed}, {"expected", c.expected}, {"ok", c.ok()}});
  return out;
}

json semisimple_json(const SemiSimpleVerdict& v) {
  json mode{{"kind", v.mode.kind == SemiSimpleMode::Kind::Closed ? "closed" : "boundary"}, {"m", v.mode.m}};
  if (v.mode.kind == SemiSimpleMode::Kind::Boundary) mode["m_prime"] = v.mode.m_prime;
  return json{{"mode", mode},
              {"triples", counts_json(v.triples)},
              {"edge_multiplicities", counts_json(v.edge_multiplicities)},
              {"pass", v.pass}};
}

json relations_json(const RelationReport& rel) {
  json rows = json::array();
  for (const auto& c : rel.checks)
    rows.push_back(json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds()}});
  return json{{"checks", rows}, {"all_hold", rel.all_hold()}};
}

json variant_json(const DecompositionVariant& v) {
  return json{{"label", v.label},
              {"handles", v.handles.counts},
              {"alternating_sum", v.handles.alternating_sum()},
              {"cap", to_string(v.cap)},
              {"asserted", v.asserted},
              {"beta1_vprime", v.beta1_vprime}};
}

json decomposition_json(const DecompositionReport& d) {
  json variants = json::array(), conditional = json::array();
  for (const auto& v : d.variants) variants.push_back(variant_json(v));
  for (const auto& v : d.conditional) conditional.push_back(variant_json(v));
  json j{{"mode", d.mode == DecompositionMode::Closed ? "closed" : "boundary"},
         {"beta2", d.beta2},
         {"variants", variants},
         {"conditional", conditional},
         {"chi_certificate", d.chi_certificate},
         {"provenance", d.provenance}};
  if (d.realized_label) j["realized_label"] = *d.realized_label;
  return j;
}

template <class T, class F>
void put(json& j, const char* key, const Outcome<T>& o, F&& render) {
  if (o.value)
    j[key] = render(*o.value);
  else if (o.error)
    j[key] = json{{"error", json{{"code", o.error->code}, {"message", o.error->message}}}};
  else if (o.not_applicable)
    j[key] = json{{"not_applicable", *o.not_applicable}};
}

json certificates_json(const std::vector<Certificate>& certs) {
  json out = json::array();
  for (const auto& c : certs) out.push_back(json{{"name", c.name}, {"pass", c.pass}});
  return out;
}

std::string pass_word(bool pass) { return pass ? "pass" : "fail"; }

template <class Seq>
std::string tuple_text(const Seq& xs) {
  std::string out = "(";
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + ")";
}

template <class T>
bool text_skip(std::ostream& os, const char* title, const Outcome<T>& o) {
  if (o.error) {
    os << title << ": error " << o.error->code << ": " << o.error->message << "\n";
    return true;
  }
  if (o.not_applicable) {
    os << title << ": not applicable (" << *o.not_applicable << ")\n";
    return true;
  }
  return !o.value;
}

void certificates_text(std::ostream& os, const std::vector<Certificate>& certs, bool all) {
  for (const auto& c : certs) os << "certificate " << c.name << ": " << pass_word(c.pass) << "\n";
  os << "status: " << pass_word(all) << "\n";
}

void decomposition_text(std::ostream& os, const DecompositionReport& d) {
  os << "decomposition mode: " << (d.mode == DecompositionMode::Closed ? "closed" : "boundary") << "\n";
  os << "beta2: " << d.beta2 << "\n";
  for (const auto& v : d.variants) {
    os << "variant " << v.label << ": " << v.handles.to_string();
    if (v.cap != Cap::None) os << " + " << to_string(v.cap);
    if (d.mode == DecompositionMode::Closed) os << "  chi=" << v.handles.alternating_sum();
    os << "\n";
  }
  for (const auto& v : d.conditional)
    os << "conditional " << v.label << ": " << v.handles.to_string() << " (" << to_string(v.cap) << ")\n";
  if (d.realized_label) os << "realized: " << *d.realized_label << "\n";
}

}  // namespace

std::string to_json(const AnalysisReport& r) {
  json pairs = json::object(), triples = json::object();
  for (const auto& [s, n] : r.g_pairs) pairs[mask_key(s)] = n;
  for (const auto& [s, n] : r.g_triples) triples[mask_key(s)] = n;
  json j{{"schema_version", 1},
         {"graph",
          json{{"name", r.name},
               {"hash", r.hash},
               {"dimension", r.dimension},
               {"vertices", r.vertices},
               {"edges", r.edge_count}}},
         {"regularity", r.regularity.to_string()},
         {"contracted", r.contracted},
         {"bipartite", r.bipartite},
         {"connected", r.connected},
         {"g_profile", json{{"pairs", pairs}, {"triples", triples}}},
         {"certificates", certificates_json(r.certificates)},
         {"status", pass_word(r.all_pass())}};
  if (r.f_vector) j["complex"] = json{{"f_vector", *r.f_vector}, {"euler", *r.euler}};
  put(j, "homology", r.homology, homology_json);
  put(j, "genus", r.genus, genus_json);
  put(j, "classification", r.classification, classification_json);
  put(j, "identities", r.identities, identities_json);
  put(j, "semisimple", r.semisimple, semisimple_json);
  put(j, "lemma", r.lemma, relations_json);
  put(j, "decomposition", r.decomposition, decomposition_json);
  return j.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "graph: " << r.name << " [" << r.hash << "]\n";
  os << "dimension: " << r.dimension << ", vertices: " << r.vertices << ", edges: " << r.edge_count << "\n";
  os << "regularity: " << r.regularity.to_string() << "\n";
  os << "contracted: " << (r.contracted ? "yes" : "no") << ", bipartite: " << (r.bipartite ? "yes" : "no")
     << ", connected: " << (r.connected ? "yes" : "no") << "\n";
  os << "g_ij:";
  for (const auto& [s, n] : r.g_pairs) os << " " << mask_key(s) << "=" << n;
  os << "\n";
  if (!r.g_triples.empty()) {
    os << "g_ijk:";
    for (const auto& [s, n] : r.g_triples) os << " " << mask_key(s) << "=" << n;
    os << "\n";
  }
  if (r.f_vector) os << "f-vector: " << tuple_text(*r.f_vector) << ", euler: " << *r.euler << "\n";
  if (!text_skip(os, "homology", r.homology)) {
    const auto& h = *r.homology.value;
    os << "homology: betti " << tuple_text(h.betti) << (h.torsion_free() ? ", torsion-free" : "") << "\n";
    for (std::size_t k = 0; k < h.torsion.size(); ++k)
      if (!h.torsion[k].empty()) {
        os << "  torsion H" << k << ":";
        for (const auto& t : h.torsion[k]) os << " Z/" << t.str();
        os << "\n";
      }
  }
  if (!text_skip(os, "genus", r.genus)) {
    const auto& gr = *r.genus.value;
    for (const auto& row : gr.table)
      os << "  " << row.eps.to_string() << " chi=" << row.chi << " rho=" << to_string(row.rho) << "\n";
    os << "regular genus: " << to_string(gr.minimum) << "\n";
  }
  if (!text_skip(os, "classification", r.classification)) {
    const auto& c = *r.classification.value;
    os << "residues:";
    for (std::size_t col = 0; col < c.verdicts.size(); ++col) os << " " << col << "=" << to_string(c.verdicts[col]);
    os << "\n";
    os << "classification: "
       << (c.closed_candidate() ? "ClosedCandidate" : "SingularWithColors(" + c.singular_colors.to_string() + ")")
       << " (homology-level only)\n";
  }
  if (!text_skip(os, "identities", r.identities)) {
    const auto& id = *r.identities.value;
    os << "identities along (0,1,2,3,4): rho=" << to_string(id.rho) << ", euler=" << id.euler
       << (id.singular_mode ? ", singular mode" : "") << "\n";
    for (const auto* group : {&id.eq1, &id.eq2})
      for (const auto& c : *group)
        os << "  " << c.name << " j=" << c.j << ": " << to_string(c.lhs) << " = " << to_string(c.rhs) << " "
           << pass_word(c.holds()) << "\n";
    os << "  eq3: " << to_string(id.eq3.lhs) << " = " << to_string(id.eq3.rhs) << " " << pass_word(id.eq3.holds())
       << "\n";
  }
  if (!text_skip(os, "semisimple", r.semisimple)) {
    const auto& v = *r.semisimple.value;
    os << "semisimple " << v.mode.to_string() << ": " << pass_word(v.pass) << "\n";
    for (const auto& f : v.failures())
      os << "  " << (f.colors.size() == 3 ? "g" : "1-simplices ") << mask_key(f.colors) << " = " << f.observed
         << ", expected " << f.expected << "\n";
  }
  if (!text_skip(os, "lemma", r.lemma)) {
    for (const auto& c : r.lemma.value->checks)
      os << "  " << c.name << ": " << c.lhs << " = " << c.rhs << " " << pass_word(c.holds()) << "\n";
  }
  if (!text_skip(os, "decomposition", r.decomposition)) decomposition_text(os, *r.decomposition.value);
  certificates_text(os, r.certificates, r.all_pass());
  return os.str();
}

std::string to_json(const DecompositionReport& d, const std::vector<Certificate>& certs) {
  const bool all = std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.pass; });
  json j{{"schema_version", 1},
         {"decomposition", decomposition_json(d)},
         {"certificates", certificates_json(certs)},
         {"status", pass_word(all)}};
  return j.dump(2) + "\n";
}

std::string to_text(const DecompositionReport& d, const std::vector<Certificate>& certs) {
  std::ostringstream os;
  decomposition_text(os, d);
  const bool all = std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.pass; });
  certificates_text(os, certs, all);
  return os.str();
}

}  // namespace gemkit
