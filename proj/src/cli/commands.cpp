#include "kcontact/cli/commands.hpp"

#include "kcontact/cli/build.hpp"
#include "kcontact/cohomology/forms.hpp"
#include "kcontact/contact/contact.hpp"
#include "kcontact/lattice/lattice.hpp"
#include "kcontact/liealg/classify.hpp"
#include "kcontact/liealg/hom.hpp"
#include "kcontact/tievsky/basic.hpp"
#include "kcontact/tievsky/morphism.hpp"

#include <filesystem>
#include <set>
#include <sstream>

namespace kc::cli {

using nlohmann::json;
namespace fs = std::filesystem;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check",     "classify", "cohomology", "contact",        "lefschetz",
                                              "basic",     "tievsky",  "verify-morphism", "lattice"};
  return names;
}

namespace {

// Errors that mean a mathematical statement failed rather than bad input.
bool is_math_failure(const std::string& kind) {
  static const std::set<std::string> kinds{"jacobi-violation", "d-squared-nonzero", "image-not-closed",
                                           "omega-not-closed", "omega-degenerate",  "hirsch-class-not-closed",
                                           "not-closed",       "no-solution-in-window", "not-a-homomorphism",
                                           "not-an-isomorphism", "not-contact"};
  return kinds.count(kind) > 0;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

struct Context {
  dsl::AlgebraDecl decl;
  LieAlgebra generic;
  LieAlgebra L;
  std::optional<Rational> at;
  std::string var;

  std::vector<std::string> names() const { return L.names(); }
  std::vector<std::string> duals() const { return L.dual_names(); }
  std::string scalar(const Scalar& s) const { return scalar_to_string(s, var); }
  std::string form(const Form& f) const { return to_string(f, duals(), var); }
  std::string vector(const Vector& v) const {
    Form f(L.dim(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) f.add_term(Blade{1} << i, v[i]);
    return to_string(f, names(), var);
  }
  Form build_form(const dsl::Expr& e) const {
    Form f = dsl::build_form(decl, e);
    return at ? dsl::specialize(f, *at) : f;
  }
  MetricData metric() const {
    MetricData md = dsl::build_metric(decl);
    if (at) {
      md.g = dsl::specialize(md.g, *at);
      md.phi = dsl::specialize(md.phi, *at);
    }
    return md;
  }
  ContactData contact() const {
    if (!decl.contact) throw Error("missing-contact", "the algebra has no 'contact:' line");
    const ContactResult cr = is_contact(L, build_form(*decl.contact));
    if (!cr.contact) throw Error("not-contact", "eta ^ (d eta)^n vanishes for eta = " + form(build_form(*decl.contact)));
    return *cr.data;
  }
};

std::optional<Rational> parse_specialization(const std::optional<std::string>& text, const dsl::AlgebraDecl* decl) {
  if (!text) return std::nullopt;
  const auto eq = text->find('=');
  if (eq == std::string::npos) throw Error("usage", "--specialize expects NAME=RATIONAL");
  const std::string name = text->substr(0, eq);
  if (decl && decl->parameter != name)
    throw Error("usage", "'" + name + "' is not the declared parameter of " + (decl ? decl->name : std::string("the input")));
  return parse_rational(text->substr(eq + 1));
}

void describe_input(Report& rep, const std::string& path, const std::string& bytes) {
  rep.input = {{"file", fs::path(path).filename().string()}, {"sha256", sha256_hex(bytes)}};
}

Context load_context(const Options& o, Report& rep) {
  const std::string text = dsl::read_file(o.file);
  describe_input(rep, o.file, text);
  dsl::Document doc = dsl::parse(text);
  if (doc.algebras.size() != 1) throw Error("syntax-error", o.file + " must contain exactly one algebra");
  dsl::AlgebraDecl decl = std::move(doc.algebras.front());
  const auto at = parse_specialization(o.specialize, &decl);
  LieAlgebra generic = dsl::build_algebra(decl);
  LieAlgebra L = at ? generic.specialize(*at) : generic;
  rep.field = L.field().describe();
  if (at) {
    const auto gb = betti(generic.ce_complex());
    const auto sb = betti(L.ce_complex());
    if (gb != sb)
      rep.warnings.push_back("specialization changes ranks: generic Betti " + join(gb) + ", specialized " + join(sb));
  }
  std::string var = decl.parameter.value_or("p");
  return Context{std::move(decl), std::move(generic), std::move(L), at, std::move(var)};
}

json vec_json(const std::vector<std::size_t>& v) { return json(v); }

std::vector<int> degrees_or(const Options& o, int lo, int hi) {
  std::vector<int> ds;
  if (o.degrees.empty()) {
    for (int k = lo; k <= hi; ++k) ds.push_back(k);
  } else {
    for (int k : o.degrees) {
      if (k < lo || k > hi)
        throw Error("invalid-degree", "degree " + std::to_string(k) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
      ds.push_back(k);
    }
  }
  return ds;
}

void cmd_check(const Options& o, Report& rep) {
  Context c = load_context(o, rep);
  rep.check("jacobi", true);
  bool square_zero = true;
  json sq = json::object();
  try {
    c.L.ce_complex().check_square_zero();
  } catch (const Error& e) {
    square_zero = false;
    sq = {{"message", e.what()}};
  }
  rep.check("d-squared-zero", square_zero, sq);
  const CochainComplex serial = ce_differential_serial(c.L);
  bool agree = true;
  for (std::size_t k = 0; k < serial.d.size(); ++k) agree = agree && serial.d[k] == c.L.ce_complex().d[k];
  rep.check("serial-parallel-differentials-agree", agree, json{{"message", "kernels disagree"}});

  json diffs = json::object();
  rep.line("structure equations:");
  for (int i = 0; i < c.L.dim(); ++i) {
    const std::string lhs = c.duals()[static_cast<std::size_t>(i)];
    const std::string rhs = c.form(c.L.d_generator(i));
    diffs[lhs] = rhs;
    rep.line("  d " + lhs + " = " + rhs);
  }
  rep.results = {{"dimension", c.L.dim()},
                 {"basis", c.names()},
                 {"parameter", c.decl.parameter ? json(*c.decl.parameter) : json(nullptr)},
                 {"differentials", diffs}};
}

void cmd_classify(const Options& o, Report& rep) {
  Context c = load_context(o, rep);
  const StructureReport s = classify(c.L, c.at);
  json flag = nullptr;
  if (s.flag) {
    flag = json::array();
    for (const auto& v : *s.flag) flag.push_back(c.vector(v));
  }
  rep.results = {{"nilpotent", s.nilpotent},
                 {"solvable", s.solvable},
                 {"completely_solvable", to_string(s.completely_solvable)},
                 {"unimodular", s.unimodular},
                 {"lower_central_dims", vec_json(s.lower_central_dims)},
                 {"derived_dims", vec_json(s.derived_dims)},
                 {"flag", flag}};
  if (c.at) {
    // the structure constants were already specialized; also re-check the generic traces there
    const StructureReport g = classify(c.generic, c.at);
    rep.results["unimodular_generic"] = g.unimodular;
    rep.results["unimodular_at_specialization"] = *g.unimodular_at_specialization;
  }
  rep.line(std::string("nilpotent: ") + (s.nilpotent ? "yes" : "no"));
  rep.line(std::string("solvable: ") + (s.solvable ? "yes" : "no"));
  rep.line("completely solvable: " + to_string(s.completely_solvable));
  rep.line(std::string("unimodular: ") + (s.unimodular ? "yes" : "no"));
  rep.line("lower central series dims: " + join(s.lower_central_dims));
  rep.line("derived series dims: " + join(s.derived_dims));
  if (s.flag) {
    std::string f;
    for (const auto& v : *s.flag) f += (f.empty() ? "" : " < ") + std::string("+") + c.vector(v);
    rep.line("flag of ideals (added vectors): " + f);
  }
  if (s.completely_solvable == Verdict::unknown)
    rep.warnings.push_back("complete solvability undecided: some adjoint eigenvalues are not in the scalar field");
}

void cmd_cohomology(const Options& o, Report& rep) {
  Context c = load_context(o, rep);
  const FormCohomology H(c.L, ce_form_complex(c.L));
  const DualityReport d = duality_report(c.L);
  const auto b = H.betti();
  rep.line("betti: " + join(b));
  json reps = json::object();
  for (int k : degrees_or(o, 0, c.L.dim())) {
    json list = json::array();
    std::string l;
    for (const auto& f : H.representatives(k)) {
      list.push_back(c.form(f));
      l += (l.empty() ? "" : ", ") + c.form(f);
    }
    reps[std::to_string(k)] = list;
    rep.line("H^" + std::to_string(k) + ": " + (l.empty() ? "0" : l));
  }
  rep.results = {{"betti", vec_json(b)}, {"euler_characteristic", d.euler}, {"unimodular", d.unimodular},
                 {"poincare_duality", d.poincare}, {"representatives", reps}};
  if (c.at) rep.results["generic_betti"] = vec_json(betti(c.generic.ce_complex()));
  if (c.L.dim() >= 1) rep.check("euler-characteristic-zero", d.euler == 0, json{{"euler_characteristic", d.euler}});
  if (d.unimodular) rep.check("poincare-duality", d.poincare, json{{"betti", vec_json(b)}});
}

json identity_witness(const Context& c, const IdentityCheck& ic) {
  json w{{"note", ic.note}};
  if (ic.witness) {
    w["pair"] = {c.names()[static_cast<std::size_t>(ic.witness->first) % c.names().size()],
                 c.names()[static_cast<std::size_t>(ic.witness->second) % c.names().size()]};
    w["lhs"] = c.scalar(ic.lhs);
    w["rhs"] = c.scalar(ic.rhs);
  }
  return w;
}

void cmd_contact(const Options& o, Report& rep) {
  Context c = load_context(o, rep);
  if (!c.decl.contact) throw Error("missing-contact", "the algebra has no 'contact:' line");
  const Form eta = c.build_form(*c.decl.contact);
  const ContactResult cr = is_contact(c.L, eta);
  rep.check("contact", cr.contact, json{{"volume", c.form(cr.volume)}, {"eta", c.form(eta)}});
  rep.results["eta"] = c.form(eta);
  rep.results["d_eta"] = c.form(c.L.d(eta));
  if (!cr.contact) return;
  const ContactData& cd = *cr.data;
  rep.results["volume"] = c.form(cr.volume);
  rep.results["reeb"] = c.vector(cd.reeb);
  rep.line("eta ^ (d eta)^" + std::to_string(cd.n) + " = " + c.form(cr.volume));
  rep.line("reeb: " + c.vector(cd.reeb));

  if (!c.decl.phi.empty() || c.decl.metric) {
    const MetricData md = c.metric();
    const ContactMetricReport cm = is_contact_metric(c.L, cd, md, c.at);
    json ids = json::object();
    for (const auto& ic : cm.checks) {
      ids[ic.name] = to_string(ic.status);
      if (ic.status == CheckStatus::unknown) {
        rep.warnings.push_back(ic.name + ": " + ic.note);
        continue;
      }
      rep.check(ic.name, ic.status == CheckStatus::pass, identity_witness(c, ic));
    }
    rep.results["contact_metric"] = ids;
    const KContactReport k = is_k_contact(c.L, cd, md);
    json kw = json::object();
    if (k.witness)
      kw = {{"pair", {c.names()[static_cast<std::size_t>(k.witness->first)], c.names()[static_cast<std::size_t>(k.witness->second)]}},
            {"residual", c.scalar(k.residual)}};
    rep.results["reeb_central"] = k.central;
    rep.results["killing"] = k.killing;
    rep.line(std::string("reeb central: ") + (k.central ? "yes" : "no"));
    rep.check("k-contact", k.killing, kw);
  }

  if (o.quotient) {
    const std::string qtext = dsl::read_file(*o.quotient);
    const dsl::Document qd = dsl::parse(qtext);
    if (qd.algebras.size() != 1) throw Error("syntax-error", *o.quotient + " must contain exactly one algebra");
    const dsl::AlgebraDecl& qa = qd.algebras.front();
    if (!qa.symplectic) throw Error("missing-symplectic", *o.quotient + " has no 'symplectic:' line");
    LieAlgebra target = dsl::build_algebra(qa);
    Form omega = dsl::build_form(qa, *qa.symplectic);
    if (c.at) {
      target = target.specialize(*c.at);
      omega = dsl::specialize(omega, *c.at);
    }
    const AlgebraHom h = AlgebraHom::by_names(c.L, target);
    const QuotientCheck q = symplectization_quotient_check(h, omega, cd);
    rep.results["quotient"] = {{"target", qa.name}, {"omega", to_string(omega, target.dual_names(), c.var)},
                               {"pullback", c.form(q.pullback)}};
    rep.check("symplectic-quotient", q.equal, json{{"difference", c.form(q.difference)}, {"pullback", c.form(q.pullback)},
                                                    {"d_eta", c.form(c.L.d(cd.eta))}});
  }
}

void cmd_lefschetz(const Options& o, Report& rep) {
  Context c = load_context(o, rep);
  const ContactData cd = c.contact();
  const FormCohomology H(c.L, ce_form_complex(c.L));
  json per = json::array();
  for (int p : degrees_or(o, 0, cd.n)) {
    const LefschetzReport lr = lefschetz_relation(H, cd, p);
    json m = nullptr;
    if (lr.matrix) {
      m = json::array();
      for (std::size_t i = 0; i < lr.matrix->rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < lr.matrix->cols(); ++j) row.push_back(c.scalar((*lr.matrix)(i, j)));
        m.push_back(row);
      }
    }
    per.push_back({{"degree", p},
                   {"image_degree", lr.image_degree},
                   {"dim_h", lr.dim_h},
                   {"dim_h_image", lr.dim_h_image},
                   {"relation_dim", lr.relation_dim},
                   {"image_rank", lr.image_rank},
                   {"total", lr.total},
                   {"single_valued", lr.single_valued},
                   {"graph_of_iso", lr.graph_of_iso},
                   {"matrix", m}});
    rep.line("degree " + std::to_string(p) + ": graph of isomorphism: " + (lr.graph_of_iso ? "yes" : "no") +
             " (b_" + std::to_string(p) + " = " + std::to_string(lr.dim_h) + ", b_" + std::to_string(lr.image_degree) +
             " = " + std::to_string(lr.dim_h_image) + ", relation dim " + std::to_string(lr.relation_dim) + ")");
    rep.check("lefschetz-degree-" + std::to_string(p), lr.graph_of_iso,
              json{{"dim_h", lr.dim_h}, {"dim_h_image", lr.dim_h_image}, {"relation_dim", lr.relation_dim},
                   {"image_rank", lr.image_rank}, {"total", lr.total}, {"single_valued", lr.single_valued}});
    if (lr.graph_of_iso && p % 2 == 1 && lr.dim_h % 2 != 0)
      rep.check("odd-betti-even-" + std::to_string(p), false, json{{"betti", lr.dim_h}});
  }
  rep.results = {{"degrees", per}, {"n", cd.n}, {"reeb", c.vector(cd.reeb)},
                 {"hypothesis", "invariant forms compute de Rham cohomology (completely solvable lattice quotient)"}};
}

std::string class_name(int k, std::size_t i) { return "h" + std::to_string(k) + "_" + std::to_string(i); }

std::string class_string(const Context& c, const CohClass& x) {
  std::string s;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i].is_zero()) continue;
    std::string coef = c.scalar(x.coords[i]);
    const bool neg = coef[0] == '-';
    if (neg) coef.erase(0, 1);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (coef != "1") s += (coef.find_first_of("+- ") != std::string::npos ? "(" + coef + ")" : coef) + "*";
    s += class_name(x.degree, i);
  }
  return s.empty() ? "0" : s;
}

void cmd_basic(const Options& o, Report& rep) {
  Context c = load_context(o, rep);
  const ContactData cd = c.contact();
  const FormCohomology HB = basic_cohomology(c.L, cd);
  const auto b = HB.betti();
  rep.line("basic complex dims: " + join(HB.complex().complex.dims));
  rep.line("basic betti: " + join(b));
  json reps = json::object();
  for (int k = 0; k <= HB.top(); ++k) {
    const auto forms = HB.representatives(k);
    json list = json::object();
    for (std::size_t i = 0; i < forms.size(); ++i) {
      list[class_name(k, i)] = c.form(forms[i]);
      rep.line("  " + class_name(k, i) + " = [" + c.form(forms[i]) + "]");
    }
    reps[std::to_string(k)] = list;
  }
  json cups = json::array();
  for (int j = 1; j <= HB.top(); ++j)
    for (int k = j; j + k <= HB.top(); ++k)
      for (std::size_t x = 0; x < b[static_cast<std::size_t>(j)]; ++x)
        for (std::size_t y = 0; y < b[static_cast<std::size_t>(k)]; ++y) {
          if (j == k && y < x) continue;
          CohClass cx{j, Vector(b[static_cast<std::size_t>(j)], Scalar(0))}, cy{k, Vector(b[static_cast<std::size_t>(k)], Scalar(0))};
          cx.coords[x] = Scalar(1);
          cy.coords[y] = Scalar(1);
          const CohClass z = HB.cup(cx, cy);
          const std::string prod = class_string(c, z);
          cups.push_back({{"x", class_name(j, x)}, {"y", class_name(k, y)}, {"product", prod}});
          rep.line("  " + class_name(j, x) + " * " + class_name(k, y) + " = " + prod);
        }
  const FormClassResult de = HB.class_of(c.L.d(cd.eta));
  rep.line("[d eta]_B = " + class_string(c, de.cls));
  rep.results = {{"dims", vec_json(HB.complex().complex.dims)}, {"betti", vec_json(b)}, {"representatives", reps},
                 {"cup_products", cups}, {"d_eta_class", class_string(c, de.cls)}, {"reeb", c.vector(cd.reeb)}};
  rep.check("d-eta-basic-closed", de.closed, json{{"d", c.form(de.witness)}});
}

void cmd_tievsky(const Options& o, Report& rep) {
  Context c = load_context(o, rep);
  const ContactData cd = c.contact();
  const FormCohomology HB = basic_cohomology(c.L, cd);
  const CDGA ring = cohomology_cdga(HB);
  const FormClassResult de = HB.class_of(c.L.d(cd.eta));
  Vector b = ring.extend(de.cls.coords, 2);
  const CDGA model = hirsch_extension(ring, b);
  const std::string dy = model.format(model.d(model.basis(ring.size() + ring.unit_index())));
  const auto violation = validate(model);
  rep.check("model-is-cdga", !violation, violation ? json{{"law", violation->law}, {"at", violation->witness}} : json());
  const auto mb = cdga_cohomology(model).betti;
  const auto cb = betti(c.L.ce_complex());
  rep.line("d y = " + dy);
  rep.line("model dimension: " + std::to_string(model.size()));
  rep.line("model betti: " + join(mb));
  rep.line("CE betti: " + join(cb));
  rep.check("model-betti-equals-ce-betti", mb == cb, json{{"model", vec_json(mb)}, {"ce", vec_json(cb)}});
  rep.results = {{"model_dimension", model.size()}, {"model_betti", vec_json(mb)}, {"ce_betti", vec_json(cb)},
                 {"basic_betti", vec_json(HB.betti())}, {"dy", dy}};
}

void cmd_verify_morphism(const Options& o, Report& rep) {
  const std::string text = dsl::read_file(o.file);
  describe_input(rep, o.file, text);
  const dsl::Document doc = dsl::parse(text);
  if (doc.morphisms.empty()) throw Error("syntax-error", o.file + " contains no morphism");
  const fs::path base = fs::path(o.file).parent_path();
  json all = json::object();
  for (const auto& m : doc.morphisms) {
    std::optional<Rational> at;
    if (o.specialize) {
      const dsl::AlgebraDecl target = dsl::load_algebra(base / m.target_path);
      at = parse_specialization(o.specialize, &target);
    }
    const dsl::BuiltMorphism bm = dsl::build_morphism(m, base, at);
    rep.field = at ? "Q (specialized at " + at->get_str() + ")" : "Q(p)";
    const MorphismReport r = verify_morphism(bm.morphism);
    json images = json::object();
    for (std::size_t g = 0; g < m.source.size(); ++g)
      images[m.source[g].name] = bm.morphism.target.format(bm.morphism.images[g]);
    json entry{{"target", m.target_kind + " " + m.target_path},
               {"images", images},
               {"degrees", r.degrees},
               {"well_defined", r.well_defined},
               {"chain_map", r.chain_map},
               {"quasi_iso", r.quasi_iso},
               {"source_betti", vec_json(r.source_betti)},
               {"target_betti", vec_json(r.target_betti)}};
    if (bm.deta) entry["dy"] = bm.ring->ring.format(*bm.deta);
    all[m.name] = entry;
    rep.line("morphism " + m.name + " -> " + m.target_kind + " \"" + m.target_path + "\"");
    if (bm.deta) rep.line("  d y = " + entry["dy"].get<std::string>());
    rep.line(std::string("  degrees: ") + (r.degrees ? "yes" : "no") + ", well-defined: " + (r.well_defined ? "yes" : "no") +
             ", chain map: " + (r.chain_map ? "yes" : "no") + ", quasi-isomorphism: " + (r.quasi_iso ? "yes" : "no"));
    rep.check("morphism " + m.name, r.ok(), json{{"reason", r.witness.value_or("")}});
  }
  rep.results = {{"morphisms", all}};
}

std::string q(const QuadElement& x) { return x.to_string(); }

void cmd_lattice(const Options& o, Report& rep) {
  if (!o.matrix) throw Error("usage", "lattice needs --matrix a,b,c,d");
  std::vector<Integer> e;
  std::stringstream ss(*o.matrix);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      e.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw Error("usage", "matrix entry '" + item + "' is not an integer");
    }
  }
  if (e.size() != 4) throw Error("usage", "--matrix needs four comma-separated integers");
  rep.input = {{"file", nullptr}, {"matrix", *o.matrix}, {"sha256", sha256_hex(*o.matrix)}};
  const HyperbolicMatrix N{e[0], e[1], e[2], e[3]};
  const LatticeData ld = build_lattice(N);
  rep.field = "Q(sqrt" + ld.eigen.D.get_str() + ")";
  const auto h = [](const HeisenbergElement& x) { return json{q(x.x), q(x.y), q(x.z)}; };
  rep.results = {{"N", {{e[0].get_str(), e[1].get_str()}, {e[2].get_str(), e[3].get_str()}}},
                 {"D", ld.eigen.D.get_str()},
                 {"lambda", q(ld.eigen.lambda)},
                 {"eigvec_plus", {q(ld.eigen.eig_plus[0]), q(ld.eigen.eig_plus[1])}},
                 {"eigvec_minus", {q(ld.eigen.eig_minus[0]), q(ld.eigen.eig_minus[1])}},
                 {"z0", q(ld.z0)}, {"z1", q(ld.z1)}, {"z2", q(ld.z2)},
                 {"r", ld.r.get_str()}, {"s", ld.s.get_str()},
                 {"h0", h(ld.h0)}, {"h1", h(ld.h1)}, {"h2", h(ld.h2)}};
  rep.line("N = " + N.to_string() + ", lambda = " + q(ld.eigen.lambda));
  rep.line("h0 = " + ld.h0.to_string());
  rep.line("h1 = " + ld.h1.to_string());
  rep.line("h2 = " + ld.h2.to_string());
  rep.line("r = " + ld.r.get_str() + ", s = " + ld.s.get_str());
  for (const auto& c : verify_lattice(ld).checks) rep.check(c.name, c.pass, json{{"lhs", c.lhs}, {"rhs", c.rhs}});
}

}  // namespace

Report run(const Options& opts) {
  Report rep;
  rep.command = opts.command;
  try {
    if (opts.command != "lattice" && opts.file.empty()) throw Error("usage", opts.command + " needs an input file");
    if (opts.command == "check") cmd_check(opts, rep);
    else if (opts.command == "classify") cmd_classify(opts, rep);
    else if (opts.command == "cohomology") cmd_cohomology(opts, rep);
    else if (opts.command == "contact") cmd_contact(opts, rep);
    else if (opts.command == "lefschetz") cmd_lefschetz(opts, rep);
    else if (opts.command == "basic") cmd_basic(opts, rep);
    else if (opts.command == "tievsky") cmd_tievsky(opts, rep);
    else if (opts.command == "verify-morphism") cmd_verify_morphism(opts, rep);
    else if (opts.command == "lattice") cmd_lattice(opts, rep);
    else throw Error("usage", "unknown command '" + opts.command + "'");
    rep.finish();
  } catch (const JacobiViolation& e) {
    // the algebra never got built, so name the triple from the declaration
    json w{{"message", e.what()}};
    try {
      const dsl::AlgebraDecl decl = dsl::load_algebra(opts.file);
      json triple = json::array();
      for (int i : e.triple()) triple.push_back(decl.basis.at(static_cast<std::size_t>(i)));
      json residual = json::object();
      for (std::size_t i = 0; i < e.residual().size(); ++i)
        if (!e.residual()[i].is_zero()) residual[decl.basis.at(i)] = scalar_to_string(e.residual()[i], decl.parameter.value_or("p"));
      w = {{"triple", triple}, {"residual", residual}};
    } catch (const std::exception&) {
    }
    rep.check("jacobi", false, w);
    rep.finish();
  } catch (const dsl::ParseError& e) {
    rep.fail_with(e.kind(), e.message(), 2);
    rep.error["line"] = e.line();
    rep.error["column"] = e.column();
  } catch (const Error& e) {
    const bool math = is_math_failure(e.kind());
    if (math) rep.check(e.kind(), false, json{{"message", e.message()}});
    rep.fail_with(e.kind(), e.message(), math ? 1 : 2);
  } catch (const std::exception& e) {
    rep.fail_with("internal", e.what(), 2);
  }
  return rep;
}

}  // namespace kc::cli
