#include "driver.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "coframes/chain/io.hpp"
#include "coframes/dsub/dcat.hpp"
#include "coframes/error.hpp"
#include "coframes/fincat/io.hpp"
#include "coframes/sset/io.hpp"
#include "coframes/sset/nerve.hpp"
#include "properties.hpp"
#include "suites.hpp"

namespace coframes::cli {

namespace {

using namespace chain;
using nlohmann::json;

// A missing or unreadable input; reported like a parse error.
struct InputError : ParseError {
  using ParseError::ParseError;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string kind_of(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!j.is_object()) throw ParseError("", "expected an object");
  if (!j.contains("kind")) return "category";
  if (!j["kind"].is_string()) throw ParseError("kind", "expected a string");
  return j["kind"].get<std::string>();
}

DiagramFile load_diagram(const std::string& path) {
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  return read_diagram(read_file(path), [&](const std::string& ref) { return read_file((dir / ref).string()); });
}

json class_names(const fincat::FinCategory& c, const fincat::MorphismClass& w) {
  json out = json::array();
  for (int m : w.members()) out.push_back(c.morphism_name(m));
  return out;
}

json dims_of(const ChainComplex& x) {
  json out = json::object();
  for (int n = x.lo(); n <= x.hi(); ++n) out[std::to_string(n)] = x.dim(n);
  return out;
}

json homology_dims(const ChainComplex& x) {
  const Homology h = homology(x);
  json out = json::object();
  for (std::size_t k = 0; k < h.dims.size(); ++k) out[std::to_string(h.lo + static_cast<int>(k))] = h.dims[k];
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

struct Session {
  SuiteConfig cfg;
  std::string strategy = "minimal";
  std::string out_path, emit_path, format = "text", mode = "2of6";
  bool quiet = false;
  std::vector<std::string> files;
  std::string suite_name;

  Report rep;
  std::optional<std::string> artifact;

  int cap(int fallback) const { return cfg.cap_or(fallback); }

  void add_outcomes(const std::string& c, const std::vector<Outcome>& os) {
    for (const Outcome& o : os) rep.add(c, "", o.name, o.pass, o.witness);
  }

  // Category laws; false when the category is unusable.
  bool category_laws(const std::string& c, const fincat::FinCategory& cat) {
    const fincat::ValidationReport r = fincat::validate_category(cat);
    for (const auto& v : r.violations) {
      std::string w;
      for (const auto& s : v.witness) w += (w.empty() ? "" : ", ") + s;
      rep.add(c, "", v.law, false, w);
    }
    if (r.ok())
      rep.add(c, "", "category laws hold", true,
              std::to_string(cat.object_count()) + " objects, " + std::to_string(cat.morphism_count()) + " morphisms",
              {{"objects", cat.object_count()}, {"morphisms", cat.morphism_count()},
               {"direct", fincat::is_direct(cat).has_value()}});
    return r.ok();
  }

  // ---- commands -------------------------------------------------------

  void validate() {
    const std::string c = "validate";
    const std::string text = read_file(files[0]);
    const std::string kind = kind_of(text);
    if (kind == "category") {
      const fincat::CategoryFile cf = fincat::read_category(text);
      if (category_laws(c, cf.category) && cf.weq)
        rep.add(c, "", "weak equivalences contain the identities",
                fincat::MorphismClass::identities(cf.category).subset_of(*cf.weq));
    } else if (kind == "sset") {
      const sset::TruncatedSSet k = sset::read_sset(text);
      const std::string v = sset::simplicial_identity_violation(k);
      rep.add(c, "", "simplicial identities hold", v.empty(), v, {{"cap", k.cap()}});
    } else if (kind == "complex") {
      const ChainComplex x = read_complex(text);
      rep.add(c, "", "d∘d = 0", true, {}, {{"dims", dims_of(x)}, {"homology", homology_dims(x)}});
    } else if (kind == "chain-map") {
      const ChainMap f = read_chain_map(text);
      const std::string v = chain_map_violation(f);
      const MapClass m = classify_map(f);
      rep.add(c, "", "commutes with the differentials", v.empty(), v,
              {{"weq", m.is_weq}, {"cofibration", m.is_cofibration}});
    } else if (kind == "diagram") {
      const DiagramFile df = load_diagram(files[0]);
      const std::string v = diagram_violation(df.diagram);
      rep.add(c, "", "functor laws hold", v.empty(), v);
      if (v.empty() && df.weq) {
        const auto m = homotopical_violation(df.diagram, *df.weq);
        rep.add(c, "", "homotopical", !m, m ? "at " + df.diagram.index->morphism_name(*m) : "");
      }
    } else {
      throw ParseError("kind", "unknown kind \"" + kind + "\"");
    }
  }

  void nerve() {
    const std::string c = "nerve";
    const fincat::CategoryFile cf = fincat::read_category(read_file(files[0]));
    if (!category_laws(c, cf.category)) return;
    const sset::TruncatedSSet n = sset::nerve(cf.category, cap(3));
    const std::string v = sset::simplicial_identity_violation(n);
    json counts = json::array();
    for (int d = 0; d <= n.cap(); ++d) counts.push_back(n.count(d));
    rep.add(c, "", "simplicial identities hold", v.empty(), v, {{"simplices", counts}});
    artifact = sset::write_sset(n);
  }

  void hocat() {
    const std::string c = "hocat";
    const auto k = sset::share(sset::read_sset(read_file(files[0])));
    const sset::HomotopyCategory hk = sset::homotopy_category(*k, cfg.budget);
    rep.add(c, "", "saturation stabilizes", hk.stabilized(), "word budget " + std::to_string(cfg.budget));
    if (!hk.stabilized()) return;
    const fincat::FinCategory& h = hk.category();
    category_laws(c, h);
    if (sset::is_one_skeletal(*k)) {
      const sset::UnitMap u = sset::unit_map(k, cfg.budget);
      const std::string v = sset::simplicial_map_violation(u.map);
      rep.add(c, "", "unit K -> N(hK) is an injective simplicial map", v.empty() && sset::is_injective(u.map), v);
    }
    artifact = fincat::write_category(h);
  }

  void dsub_build() {
    const std::string c = "dsub build";
    const std::string text = read_file(files[0]);
    const std::string kind = kind_of(text);
    std::optional<dsub::DCat> d;
    if (kind == "sset") {
      d = dsub::d_subdivision(sset::share(sset::read_sset(text)), cap(3));
    } else if (kind == "category") {
      const fincat::CategoryFile cf = fincat::read_category(text);
      if (!category_laws(c, cf.category)) return;
      d = dsub::d_subdivision(fincat::share(cf.category), cap(3));
    } else {
      throw ParseError("kind", "expected a category or an sset");
    }
    const fincat::FinCategory& dc = *d->category;
    category_laws(c, dc);
    bool raises = true;
    for (int m : dc.non_identities()) raises = raises && d->dim(dc.source(m)) < d->dim(dc.target(m));
    rep.add(c, "", "direct with the dimension degree", raises && fincat::is_direct(dc).has_value());
    if (d->base_category) rep.add(c, "", "weak equivalences equal the p-iso class", d->weq == dsub::p_iso_class(*d));
    json objects = json::array();
    for (int o = 0; o < dc.object_count(); ++o)
      objects.push_back({{"name", dc.object_name(o)}, {"dim", d->dim(o)}, {"degree", d->degree.degree[o]}});
    rep.add(c, "", "D(K) built", true,
            std::to_string(dc.object_count()) + " objects, " + std::to_string(dc.morphism_count()) + " morphisms, " +
                std::to_string(d->weq.size()) + " weak equivalences",
            {{"cap", d->cap}, {"objects", objects}, {"morphisms", dc.morphism_count()}, {"weq", class_names(dc, d->weq)}});
    artifact = fincat::write_category(dc, &d->weq);
  }

  void weq_closure() {
    const std::string c = "weq-closure";
    const fincat::CategoryFile cf = fincat::read_category(read_file(files[0]));
    if (!category_laws(c, cf.category)) return;
    const fincat::FinCategory& cat = cf.category;
    const fincat::MorphismClass seed = cf.weq.value_or(fincat::MorphismClass::identities(cat));
    const auto m = mode == "2of3" ? fincat::ClosureMode::TwoOfThree : fincat::ClosureMode::TwoOfSix;
    const fincat::MorphismClass cl = fincat::closure(cat, seed, m);
    rep.add(c, "", "contains the seed and the identities",
            seed.subset_of(cl) && fincat::MorphismClass::identities(cat).subset_of(cl));
    const auto bad = fincat::closure_violation(cat, cl, m);
    std::string w;
    for (int x : bad) w += (w.empty() ? "" : ", ") + cat.morphism_name(x);
    rep.add(c, "", std::string("closed under ") + (m == fincat::ClosureMode::TwoOfSix ? "2-out-of-6" : "2-out-of-3"),
            bad.empty(), w);
    rep.add(c, "", "idempotent", fincat::closure(cat, cl, m) == cl, std::to_string(cl.size()) + " members",
            {{"members", class_names(cat, cl)}});
    artifact = fincat::write_category(cat, &cl);
  }

  void reedy_check() {
    const std::string c = "reedy check";
    const DiagramFile df = load_diagram(files[0]);
    const std::string v = diagram_violation(df.diagram);
    rep.add(c, "", "functor laws hold", v.empty(), v);
    if (!v.empty()) return;
    const ReedyStatus st = reedy_cofibrant(df.diagram);
    json latching = json::object();
    for (int o = 0; o < df.diagram.index->object_count(); ++o)
      latching[df.diagram.index->object_name(o)] = latching_object(df.diagram, o).colimit.object->total_dim();
    rep.add(c, "", "Reedy cofibrant", st.ok,
            st.ok ? "" : df.diagram.index->object_name(st.witness) + ": " + st.detail, {{"latching_dims", latching}});
  }

  void reedy_colim() {
    const std::string c = "reedy colim";
    const DiagramFile df = load_diagram(files[0]);
    const ReedyColimit col = reedy_colimit(df.diagram);
    const std::string m = colimit_mismatch(df.diagram, col);
    rep.add(c, "", "inductive colimit equals the coequalizer colimit", m.empty(), m,
            {{"dims", dims_of(*col.object)}, {"homology", homology_dims(*col.object)}});
    artifact = write_complex(*col.object);
  }

  void reedy_replace_cmd() {
    const std::string c = "reedy replace";
    const DiagramFile df = load_diagram(files[0]);
    const fincat::MorphismClass weq = df.weq.value_or(fincat::MorphismClass::identities(*df.diagram.index));
    const Replacement r = reedy_replace(df.diagram, weq, cfg.strategy);
    const auto none = empty_sieve(df.diagram.index);
    add_outcomes(c, replacement_postconditions(df.diagram, weq, none, {none.source, {}, {}}, {}, r));
    json dims = json::object();
    for (int o = 0; o < df.diagram.index->object_count(); ++o)
      dims[df.diagram.index->object_name(o)] = r.diagram.objects[o]->total_dim();
    rep.add(c, "", "replacement built", true, r.shortcut ? "input already Reedy cofibrant" : "",
            {{"total_dims", dims}, {"shortcut", r.shortcut}});
    artifact = write_diagram(r.diagram, &weq);
  }

  void frame_valid(const std::string& c, const frames::FrameContext& ctx, const frames::FrameSimplex& s) {
    const frames::FrameReport fr = frames::validate_frame(ctx, s);
    rep.add(c, "", "Reedy cofibrant", fr.reedy_cofibrant, fr.reedy_witness);
    rep.add(c, "", "homotopical", fr.homotopical, fr.homotopical_witness);
  }

  void frames_vertex() {
    const std::string c = "frames vertex";
    const frames::FrameContext ctx(cap(3), 0, cfg.strategy);
    const auto x = share(read_complex(read_file(files[0])));
    const frames::ObjectFrame v = frames::frame_of_object(ctx, x);
    frame_valid(c, ctx, v.frame);
    rep.add(c, "", "H(value at (0,id)) ≅ H(X) through g", induced(v.to_model(ctx)).is_iso(), {},
            {{"value_dims", dims_of(*v.value())}, {"homology", homology_dims(*v.value())}});
    artifact = write_diagram(v.frame.diagram, &ctx.shape(0).weq);
  }

  void frames_edge() {
    const std::string c = "frames edge";
    const frames::FrameContext ctx(cap(3), 1, cfg.strategy);
    const ChainMap f = read_chain_map(read_file(files[0]));
    const frames::EdgeFrame e = frames::frame_of_map(ctx, f);
    frame_valid(c, ctx, e.frame);
    const auto& pr = e.problem;
    add_outcomes(c, replacement_postconditions(pr.x, ctx.shape(1).weq, pr.sieve, pr.h, pr.f,
                                               {e.frame.diagram, e.g, false}));
    const bool eq = frames::is_equivalence_edge(ctx, e.frame);
    const bool inv = frames::theta(ctx, e.frame).is_iso();
    rep.add(c, "", "equivalence edge implies θ invertible", !eq || inv,
            "equivalence edge " + yes(eq) + ", θ invertible " + yes(inv) + ", quasi-iso " + yes(is_quasi_iso(f)),
            {{"equivalence_edge", eq}, {"theta_invertible", inv}});
    artifact = write_diagram(e.frame.diagram, &ctx.shape(1).weq);
  }

  void frames_triangle() {
    const std::string c = "frames triangle";
    const frames::FrameContext ctx(cap(3), 2, cfg.strategy);
    const ChainMap f = read_chain_map(read_file(files[0]));
    ChainMap g = read_chain_map(read_file(files[1]));
    if (!(*g.source == *f.target)) throw Error("the second map does not start where the first ends");
    g.source = f.target;
    const frames::TriangleFrame t = frames::frame_of_triangle(ctx, f, g);
    frame_valid(c, ctx, t.frame);
    const auto& pr = t.problem;
    add_outcomes(c, replacement_postconditions(pr.x, ctx.shape(2).weq, pr.sieve, pr.h, pr.f,
                                               {t.frame.diagram, t.g, false}));
    const frames::TriangleReport tr = frames::check_triangle_coherence(ctx, t.frame);
    rep.add(c, "", "θ(d₁T) = θ(d₀T)∘θ(d₂T)", tr.ok, tr.detail,
            {{"d0", tr.d0.matrix.to_string()}, {"d1", tr.d1.matrix.to_string()}, {"d2", tr.d2.matrix.to_string()}});
    artifact = write_diagram(t.frame.diagram, &ctx.shape(2).weq);
  }

  void frames_theta() {
    const std::string c = "frames theta";
    const frames::FrameContext ctx(cap(3), 1, cfg.strategy);
    const ChainMap f = read_chain_map(read_file(files[0]));
    const frames::EdgeFrame e = frames::frame_of_map(ctx, f);
    const frames::HoMorphism th = frames::theta(ctx, e.frame);
    const frames::HoMorphism ex = frames::theta_expected(ctx, e);
    rep.add(c, "", "θ equals H(f) in the frame bases", frames::same_ho(th, ex), "θ = " + th.matrix.to_string(),
            {{"theta", th.matrix.to_string()}, {"expected", ex.matrix.to_string()}, {"invertible", th.is_iso()}});
  }

  void frames_verify_triangles() {
    const std::string c = "frames verify-triangles";
    const frames::FrameContext ctx(cap(3), 2, cfg.strategy);
    for (int k = 0; k < cfg.cases_or(20); ++k) {
      Rng rng = case_rng(cfg.seed, 20, k);
      const int p = cfg.prime;
      auto cx = [&] { return share(random_complex(rng, p, 0, 2, 2)); };
      const auto x = cx(), y = cx(), z = cx();
      const ChainMap f = random_chain_map(rng, x, y), g = random_chain_map(rng, y, z);
      const frames::TriangleFrame t = frames::frame_of_triangle(ctx, f, g);
      const frames::FrameReport fr = frames::validate_frame(ctx, t.frame);
      rep.add(c, case_id(k), "triangle frame is valid", fr.ok(), fr.reedy_witness + fr.homotopical_witness);
      const frames::TriangleReport tr = frames::check_triangle_coherence(ctx, t.frame);
      rep.add(c, case_id(k), "θ(d₁T) = θ(d₀T)∘θ(d₂T)", tr.ok, tr.detail);
    }
  }

  void frames_lift() {
    const std::string c = "frames lift";
    const frames::FrameContext ctx(cap(2), 1, cfg.strategy);
    const DiagramFile df = load_diagram(files[0]);
    const ChainDiagram& x = df.diagram;
    if (auto v = diagram_violation(x); !v.empty()) throw Error("diagram: " + v);
    const auto quiver = fincat::is_free(*x.index);
    rep.add(c, "", "index category is free", quiver.has_value());
    if (!quiver) return;
    std::vector<frames::ObjectFrame> vf;
    for (const auto& o : x.objects) vf.push_back(frames::frame_of_object(ctx, o));
    std::vector<GradedMatrix> arrows;
    for (int m : quiver->arrows)
      arrows.push_back(in_frame_bases(x.maps[m], vf[x.index->source(m)], vf[x.index->target(m)], ctx));
    const frames::LiftResult lr = frames::lift_free_diagram(ctx, x.index, vf, arrows);
    json thetas = json::object();
    for (std::size_t a = 0; a < lr.thetas.size(); ++a)
      thetas[x.index->morphism_name(quiver->arrows[a])] = lr.thetas[a].matrix.to_string();
    rep.add(c, "", "every generating arrow is θ of an edge frame", lr.ok, lr.detail, {{"theta", thetas}});
  }

  void verify_filtration() {
    const std::string c = "sset verify-filtration";
    sset::TruncatedSSet k = sset::read_sset(read_file(files[0]));
    if (cfg.cap) k = sset::truncate(k, *cfg.cap);
    const sset::UnitMap u = sset::unit_map(sset::share(std::move(k)), cfg.budget);
    for (int n = 1; n <= u.nerve->cap(); ++n) {
      const sset::PushoutVerification pv = sset::verify_rank_pushout(u, n);
      rep.add(c, "n=" + std::to_string(n), "rank pushout is an isomorphism", pv.ok,
              pv.ok ? "|X_n| = " + std::to_string(pv.primitive_count) : pv.witness,
              {{"n", n}, {"primitives", pv.primitive_count}});
    }
    for (int d = 0; d <= u.nerve->cap(); ++d) {
      const Outcome o = factorization_uniqueness(u, d);
      rep.add(c, "dim=" + std::to_string(d), o.name, o.pass, o.witness);
    }
    for (const Outcome& o : {rank_restriction(u), filtration_exhausts(u)}) rep.add(c, "all", o.name, o.pass, o.witness);
  }

  void classify() {
    const std::string c = "classify";
    const ChainMap f = read_chain_map(read_file(files[0]));
    const MapClass m = classify_map(f);
    rep.add(c, "", "classified", true,
            "weak equivalence " + yes(m.is_weq) + ", cofibration " + yes(m.is_cofibration) + ", acyclic cofibration " +
                yes(m.is_acyclic_cofibration),
            {{"weq", m.is_weq}, {"cofibration", m.is_cofibration}, {"acyclic_cofibration", m.is_acyclic_cofibration}});
  }

  void suite(std::ostream& out) {
    if (suite_name == "list") {
      for (const SuiteInfo& s : suites()) out << s.name << "  " << s.summary << '\n';
      return;
    }
    cfg.name = suite_name;
    rep.append(run_suite(cfg));
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Session s;
  CLI::App app{"Finite categories, thick subdivisions, chain complexes over F_p and their frames.", "coframes"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--cap", s.cfg.cap, "truncation cap")->envname("COFRAMES_CAP")->check(CLI::Range(0, 8));
  app.add_option("--prime", s.cfg.prime, "field characteristic")
      ->envname("COFRAMES_PRIME")
      ->check(CLI::Validator([](std::string& v) { return is_prime(std::stoi(v)) ? "" : v + " is not prime"; },
                             "PRIME"));
  app.add_option("--seed", s.cfg.seed, "random seed")->envname("COFRAMES_SEED");
  app.add_option("--budget", s.cfg.budget, "word-length budget for saturation")
      ->envname("COFRAMES_BUDGET")
      ->check(CLI::Range(1, 64));
  app.add_option("--cases", s.cfg.cases, "number of random cases")->envname("COFRAMES_CASES")->check(CLI::Range(1, 100000));
  app.add_option("--out", s.out_path, "write the report as JSON lines")->envname("COFRAMES_OUT");
  app.add_option("--emit", s.emit_path, "write the computed object (category, sset, complex, diagram)");
  app.add_option("--strategy", s.strategy, "factorization used by replacement")
      ->envname("COFRAMES_STRATEGY")
      ->check(CLI::IsMember({"minimal", "cylinder"}));
  app.add_option("--format", s.format, "stdout format")->check(CLI::IsMember({"text", "jsonl"}));
  app.add_flag("--quiet", s.quiet, "print only failures and the summary");

  std::function<void()> action;
  auto file_command = [&](CLI::App* parent, const std::string& name, const std::string& help, void (Session::*fn)(),
                          int files = 1) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("files", s.files, files == 1 ? "input file" : "input files")
        ->required()
        ->expected(files)
        ->check(CLI::ExistingFile);
    sub->callback([&, fn] { action = [&, fn] { (s.*fn)(); }; });
    return sub;
  };

  file_command(&app, "validate", "check a category, sset, complex, chain-map or diagram file", &Session::validate);
  file_command(&app, "nerve", "nerve of a category, truncated at --cap", &Session::nerve);
  file_command(&app, "hocat", "homotopy category of a simplicial set", &Session::hocat);
  file_command(&app, "classify", "classify a chain map", &Session::classify);
  CLI::App* closure = file_command(&app, "weq-closure", "close the weak equivalences of a category file",
                                   &Session::weq_closure);
  closure->add_option("--mode", s.mode, "closure property")->check(CLI::IsMember({"2of3", "2of6"}));

  CLI::App* dsub = app.add_subcommand("dsub", "thick subdivisions")->require_subcommand(1);
  file_command(dsub, "build", "D(K) of a category or sset file", &Session::dsub_build);

  CLI::App* sset = app.add_subcommand("sset", "simplicial sets")->require_subcommand(1);
  file_command(sset, "verify-filtration", "rank filtration of N(hK) for a 1-skeletal K", &Session::verify_filtration);

  CLI::App* reedy = app.add_subcommand("reedy", "diagrams over direct categories")->require_subcommand(1);
  file_command(reedy, "check", "Reedy cofibrancy of a diagram", &Session::reedy_check);
  file_command(reedy, "colim", "colimit of a Reedy cofibrant diagram", &Session::reedy_colim);
  file_command(reedy, "replace", "Reedy cofibrant replacement", &Session::reedy_replace_cmd);

  CLI::App* fr = app.add_subcommand("frames", "frames on D[n]")->require_subcommand(1);
  file_command(fr, "vertex", "frame of a complex", &Session::frames_vertex);
  file_command(fr, "edge", "frame of a chain map", &Session::frames_edge);
  file_command(fr, "triangle", "frame of a composable pair of chain maps", &Session::frames_triangle, 2);
  file_command(fr, "theta", "θ of the frame of a chain map", &Session::frames_theta);
  file_command(fr, "lift", "lift a diagram on a free category to frames", &Session::frames_lift);
  fr->add_subcommand("verify-triangles", "triangle coherence on random frames")->callback([&] {
    action = [&] { s.frames_verify_triangles(); };
  });

  CLI::App* suite = app.add_subcommand("suite", "run a named suite ('list' shows them)");
  suite->add_option("name", s.suite_name, "suite name")->required();
  suite->add_option("--k", s.cfg.k, "nh-unit input: delta1, spine2, spine3 or wedge");
  app.add_subcommand("properties", "seeded property tests of every module")->callback([&] {
    action = [&] { s.rep.append(run_property_tests(s.cfg)); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  s.cfg.strategy = s.strategy == "cylinder" ? FactorStrategy::Cylinder : FactorStrategy::Minimal;
  if (suite->parsed()) {
    if (s.suite_name != "list") {
      bool known = false;
      for (const SuiteInfo& info : suites()) known = known || info.name == s.suite_name;
      if (!known) {
        err << "usage error: unknown suite '" << s.suite_name << "' (try 'suite list')\n";
        return 2;
      }
    }
    action = [&] { s.suite(out); };
  }

  const std::string command = [&] {
    std::string name;
    for (const CLI::App* a = &app; !a->get_subcommands().empty();) {
      a = a->get_subcommands().front();
      name += (name.empty() ? "" : " ") + a->get_name();
    }
    return name;
  }();
  try {
    action();
  } catch (const ParseError& e) {
    err << "parse error in " << (s.files.empty() ? std::string("input") : s.files.front()) << ": " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    s.rep.add(command, "", "completes without error", false, e.what());
  }
  if (command == "suite" && s.suite_name == "list") return 0;

  if (s.format == "jsonl") {
    s.rep.write_jsonl(out);
  } else if (s.quiet) {
    Report failed;
    for (const Check& c : s.rep.checks())
      if (!c.pass) failed.add(c);
    for (const Check& c : failed.sorted())
      out << "FAIL " << c.suite << (c.id.empty() ? "" : "/" + c.id) << ' ' << c.name << ": " << c.witness << '\n';
    out << s.rep.checks().size() << " checks, " << s.rep.failures() << " failed\n";
  } else {
    s.rep.write_text(out);
  }
  if (!s.out_path.empty()) {
    std::ofstream f(s.out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << s.out_path << '\n';
      return 2;
    }
    s.rep.write_jsonl(f);
  }
  if (!s.emit_path.empty() && s.artifact) {
    std::ofstream f(s.emit_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << s.emit_path << '\n';
      return 2;
    }
    f << *s.artifact;
  }
  if (s.rep.checks().empty()) {
    err << "no checks were run\n";
    return 1;
  }
  return s.rep.ok() ? 0 : 1;
}

}  // namespace coframes::cli
