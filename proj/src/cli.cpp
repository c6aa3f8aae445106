#include "nforge/cli_io.hpp"
#include "nforge/errors.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <set>
#include <tuple>

namespace nforge::io {

namespace {

namespace fs = std::filesystem;

enum Exit { kOk = 0, kInternal = 1, kDisagree = 2, kAxiom = 3, kBadInput = 4, kUsage = 64 };

struct Common {
    int N = 1, n = 2;
    std::string mu = "+", lambda = "+";
    std::string format = "json";
    std::string out;

    SuzukiParams params() const { return SuzukiParams::make(N, n, sign_from_flag(mu), sign_from_flag(lambda)); }
};

struct FamilyArgs {
    std::string family;
    FamilyIndices idx;

    Family get() const {
        auto f = family_from_name(family);
        if (!f) throw ParseError("unknown family '" + family + "'");
        return *f;
    }
};

void add_params(CLI::App* c, Common& o) {
    c->add_option("--N", o.N, "N >= 1")->capture_default_str();
    c->add_option("--n", o.n, "n >= 1")->capture_default_str();
    c->add_option("--mu", o.mu, "+ or -")->capture_default_str();
    c->add_option("--lambda", o.lambda, "+ or -")->capture_default_str();
}

void add_output(CLI::App* c, Common& o, bool tabular = false) {
    c->add_option("--format", o.format, tabular ? "json | csv | markdown" : "json | markdown")->capture_default_str();
    c->add_option("--out", o.out, "write to this file (atomic) instead of stdout");
}

void add_family(CLI::App* c, FamilyArgs& f, bool required) {
    auto* opt = c->add_option("--family", f.family, "A, Abar, B, C, D, E, G, H, P, I, K (or F, M, N, J, L, Q)");
    if (required) opt->required();
    c->add_option("--i", f.idx.i);
    c->add_option("--j", f.idx.j);
    c->add_option("--k", f.idx.k);
    c->add_option("--p", f.idx.p);
    c->add_option("--s", f.idx.s);
    c->add_option("--t", f.idx.t);
}

void emit(const Common& o, std::ostream& out, const std::string& text) {
    if (o.out.empty()) out << text;
    else write_atomic(o.out, text);
}

void emit_json(const Common& o, std::ostream& out, const json& j) { emit(o, out, j.dump(2) + "\n"); }

Manifest manifest_for(const std::string& cmd, const Common& o) {
    Manifest m;
    m.command = cmd;
    m.params = {{"N", o.N}, {"n", o.n}, {"mu", o.mu}, {"lambda", o.lambda}};
    return m;
}

void add_key(Manifest& m, const FamilyArgs& f) { m.params["key"] = key_to_json(make_key(f.get(), f.idx)); }

Engine engine_from_name(const std::string& s) {
    if (s == "exact") return Engine::exact;
    if (s == "modular") return Engine::modular;
    if (s == "sketch") return Engine::sketch;
    throw ParseError("unknown engine '" + s + "'");
}

std::string resolve_data_file(const std::string& name, const std::string& sub, const std::string& ext) {
    if (fs::exists(name)) return name;
    for (const auto& cand : {fs::path(data_dir()) / sub / name, fs::path(data_dir()) / sub / (name + ext)})
        if (fs::exists(cand)) return cand.string();
    throw ParseError("no such file or preset: " + name);
}

// Braiding from --in, or built from the family options.
BraidedSpace load_braiding(const std::string& in, const Common& o, const FamilyArgs& f, Manifest& m) {
    if (!in.empty()) {
        const std::string text = read_file(in);
        m.input_digest = digest(text);
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("input JSON: ") + e.what());
        }
        return braiding_from_json(j);
    }
    if (f.family.empty()) throw ParseError("give --in or --family");
    add_key(m, f);
    const SuzukiAlgebra a(o.params());
    return braiding_of(build_family(a, f.get(), f.idx));
}

std::string default_relations(Family f, int n) {
    if (f == Family::I && n == 2) return "I_n2";
    if (f == Family::K && (n == 2 || n == 3)) return "K_n" + std::to_string(n);
    throw ParseError("no bundled relation file for this family; pass --relations");
}

// --bind NAME=ORDER:EXP
std::pair<std::string, Cyc> parse_binding(const std::string& s) {
    const auto eq = s.find('='), colon = s.find(':');
    if (eq == std::string::npos || colon == std::string::npos || colon < eq)
        throw ParseError("binding must look like name=order:exp, got '" + s + "'");
    try {
        const long order = std::stol(s.substr(eq + 1, colon - eq - 1));
        const long e = std::stol(s.substr(colon + 1));
        if (order < 1) throw ParseError("binding order must be positive");
        return {s.substr(0, eq), Cyc::root(static_cast<unsigned>(order), e)};
    } catch (const std::logic_error&) {
        throw ParseError("bad number in binding '" + s + "'");
    }
}

struct SweepPreset {
    SweepSpec spec;
    std::string predicate;
    std::vector<std::tuple<int, int, int>> expected;
};

std::function<bool(const DimVerdict&)> predicate_from_name(const std::string& p) {
    if (p.empty() || p == "all") return {};
    if (p.rfind("matches:", 0) == 0) {
        const auto t = tag_from_name(p.substr(8));
        if (!t) throw ParseError("unknown type tag in predicate '" + p + "'");
        const TypeTag tag = *t;
        return [tag](const DimVerdict& v) { return std::find(v.matches.begin(), v.matches.end(), tag) != v.matches.end(); };
    }
    if (auto o = outcome_from_name(p)) {
        const Outcome oc = *o;
        return [oc](const DimVerdict& v) { return v.outcome == oc; };
    }
    throw ParseError("unknown predicate '" + p + "'");
}

SweepPreset load_preset(const std::string& name) {
    const json j = json::parse(read_file(resolve_data_file(name, "presets", ".json")));
    try {
        SweepPreset p;
        const auto f = family_from_name(j.at("family").get<std::string>());
        if (!f) throw ParseError("preset family unknown");
        p.spec.family = *f;
        p.spec.params = params_from_json(j.at("params"));
        const auto& fx = j.at("fixed");
        p.spec.fixed.i = fx.value("i", 0);
        p.spec.fixed.j = fx.value("j", 0);
        p.spec.fixed.p = fx.value("p", 0);
        const auto& r = j.at("ranges");
        std::tie(p.spec.k_min, p.spec.k_max) = std::pair{r.at("k")[0].get<int>(), r.at("k")[1].get<int>()};
        std::tie(p.spec.s_min, p.spec.s_max) = std::pair{r.at("s")[0].get<int>(), r.at("s")[1].get<int>()};
        std::tie(p.spec.t_min, p.spec.t_max) = std::pair{r.at("t")[0].get<int>(), r.at("t")[1].get<int>()};
        p.predicate = j.value("predicate", "all");
        p.spec.predicate = predicate_from_name(p.predicate);
        if (j.contains("expected"))
            for (const auto& e : j.at("expected")) p.expected.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
        return p;
    } catch (const json::exception& e) {
        throw ParseError("preset " + name + ": " + e.what());
    }
}

std::vector<std::tuple<int, int, int>> triples(const std::vector<SweepRecord>& rs) {
    std::vector<std::tuple<int, int, int>> t;
    for (const auto& r : rs) t.emplace_back(r.k, r.s, r.t);
    std::sort(t.begin(), t.end());
    return t;
}

json triples_json(const std::vector<std::tuple<int, int, int>>& ts) {
    json a = json::array();
    for (auto [k, s, t] : ts) a.push_back({k, s, t});
    return a;
}

}  // namespace

int run_command(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with Suzuki Hopf algebras, their Yetter-Drinfeld modules and Nichols algebras",
                 "nforge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    Common o;
    FamilyArgs fam;
    std::string in, engine_str = "modular", relations, preset, out_dir, predicate = "all", kind_str = "V_ijk";
    std::vector<std::string> binds;
    std::size_t kmax = 8;
    int seed = 0, si = 0, sj = 0, sk = 0;
    bool do_cross = false;
    SweepSpec explicit_spec;
    std::function<int()> action;

    // suzuki
    auto* suz = app.add_subcommand("suzuki", "The Hopf algebra itself")->require_subcommand(1);
    auto* vh = suz->add_subcommand("verify-hopf", "Check every Hopf axiom on basis elements");
    add_params(vh, o);
    add_output(vh, o);
    vh->callback([&] {
        action = [&] {
            const auto r = verify_hopf(o.params());
            emit_json(o, out, envelope("hopf-report", manifest_for("suzuki verify-hopf", o), hopf_to_json(r)));
            return r.pass ? kOk : kAxiom;
        };
    });
    auto* dump = suz->add_subcommand("dump", "Basis, products, coproduct, counit and antipode");
    add_params(dump, o);
    add_output(dump, o);
    dump->callback([&] {
        action = [&] {
            const SuzukiAlgebra a(o.params());
            emit_json(o, out, envelope("suzuki-dump", manifest_for("suzuki dump", o), suzuki_dump_json(a)));
            return kOk;
        };
    });

    // yd
    auto* yd = app.add_subcommand("yd", "Yetter-Drinfeld modules")->require_subcommand(1);
    auto* build = yd->add_subcommand("build", "Build a family module and check compatibility");
    add_params(build, o);
    add_family(build, fam, true);
    add_output(build, o);
    build->callback([&] {
        action = [&] {
            const SuzukiAlgebra a(o.params());
            const auto m = build_family(a, fam.get(), fam.idx);
            const auto rep = yd_compat_check(a, m);
            json body = yd_module_to_json(m);
            body["yd_check"] = {{"pass", rep.pass}, {"failed_check", rep.failed_check}, {"detail", rep.detail},
                                {"provenance", "exact"}};
            Manifest man = manifest_for("yd build", o);
            add_key(man, fam);
            emit_json(o, out, envelope("yd-module", man, body));
            return rep.pass ? kOk : kAxiom;
        };
    });
    auto* br = yd->add_subcommand("braiding", "Braiding of a family module");
    add_params(br, o);
    add_family(br, fam, true);
    add_output(br, o);
    br->callback([&] {
        action = [&] {
            const SuzukiAlgebra a(o.params());
            const auto b = braiding_of(build_family(a, fam.get(), fam.idx));
            Manifest man = manifest_for("yd braiding", o);
            add_key(man, fam);
            if (o.format == "markdown") emit(o, out, dump_braiding(b));
            else emit_json(o, out, envelope("braiding", man, {{"braiding", braiding_to_json(b)}}));
            return kOk;
        };
    });
    auto* cen = yd->add_subcommand("census", "Count the simple objects and check the dimension identity");
    add_params(cen, o);
    add_output(cen, o);
    cen->callback([&] {
        action = [&] {
            const auto p = o.params();
            const auto c = yd_census(p);
            if (format_from_name(o.format) == OutputFormat::markdown) emit(o, out, census_markdown(p, c));
            else emit_json(o, out, envelope("census", manifest_for("yd census", o), census_to_json(p, c)));
            return c.pass() ? kOk : kAxiom;
        };
    });
    auto* dec = yd->add_subcommand("decompose", "Split V (box) A into the printed constituents");
    add_params(dec, o);
    add_output(dec, o);
    dec->add_option("--kind", kind_str, "V_ijk | Vp_ijk | V_jk | Vp_jk")->capture_default_str();
    dec->add_option("--i", si);
    dec->add_option("--j", sj);
    dec->add_option("--k", sk);
    dec->callback([&] {
        action = [&] {
            std::optional<SimpleKind> kind;
            for (auto k : {SimpleKind::V_ijk, SimpleKind::Vp_ijk, SimpleKind::V_jk, SimpleKind::Vp_jk})
                if (kind_name(k) == kind_str) kind = k;
            if (!kind) throw ParseError("unknown simple module kind '" + kind_str + "'");
            const auto p = o.params();
            const SuzukiAlgebra a(p);
            const auto d = decompose_boxtimes(a, simple_module(p, *kind, si, sj, sk));
            Manifest man = manifest_for("yd decompose", o);
            man.params["simple"] = d.simple.label();
            emit_json(o, out, envelope("decomposition", man, decomposition_to_json(d)));
            return kOk;
        };
    });

    // braided
    auto* bra = app.add_subcommand("braided", "Braided vector spaces")->require_subcommand(1);
    auto* an = bra->add_subcommand("analyze", "Braid equation, diagonal / V_abe / rack detection and a verdict");
    an->add_option("--in", in, "braiding JSON")->required();
    add_output(an, o);
    an->add_option("--kmax", kmax)->capture_default_str();
    an->callback([&] {
        action = [&] {
            Manifest man;
            man.command = "braided analyze";
            const auto b = load_braiding(in, o, fam, man);
            json body;
            const auto bc = check_braid_equation(b);
            body["braid_equation"] = {{"pass", bc.pass}, {"triples", bc.triples}, {"first_mismatch", bc.first_mismatch}};
            if (auto q = detect_diagonal(b)) {
                json rows = json::array();
                for (std::size_t i = 0; i < q->dim; ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < q->dim; ++j) row.push_back(scalar_to_json(q->at(i, j)));
                    rows.push_back(row);
                }
                body["diagonal"] = {{"q", rows}, {"dynkin", dynkin(*q).str()}};
            }
            if (auto v = detect_vabe(b))
                body["vabe"] = {{"a", scalar_to_json(v->a)}, {"b", scalar_to_json(v->b)}, {"e", scalar_to_json(v->e)}};
            if (auto rb = extract_rack(b)) {
                json rack = {{"size", rb->rack.size}};
                if (auto w = is_type_D(rb->rack))
                    rack["type_D"] = {{"r", b.label(w->r)}, {"s", b.label(w->s)}, {"value", b.label(w->value)}};
                else rack["type_D"] = nullptr;
                rack["search_exhaustive"] = type_D_search_exhaustive(rb->rack);
                body["rack"] = rack;
            }
            PipelineOptions po;
            po.kmax = kmax;
            body["verdict"] = verdict_to_json(pipeline_verdict(b, po));
            emit_json(o, out, envelope("braided-analysis", man, body));
            return bc.pass ? kOk : kAxiom;
        };
    });

    // classify [sweep]
    auto* cls = app.add_subcommand("classify", "Finite-dimensionality verdicts");
    cls->require_subcommand(0, 1);
    add_params(cls, o);
    add_family(cls, fam, false);
    add_output(cls, o);
    cls->add_flag("--cross-check", do_cross, "also run the independent pipeline; exit 2 on disagreement");
    cls->add_option("--seed", seed)->capture_default_str();
    cls->callback([&] {
        if (action) return;  // the sweep subcommand already chose
        action = [&] {
            if (fam.family.empty()) throw CLI::RequiredError("--family");
            const auto p = o.params();
            Manifest man = manifest_for("classify", o);
            add_key(man, fam);
            man.seeds["engine"] = seed;
            if (!do_cross) {
                emit_json(o, out, envelope("verdict", man, verdict_to_json(lemma_verdict(fam.get(), p, fam.idx))));
                return kOk;
            }
            const SuzukiAlgebra a(p);
            PipelineOptions po;
            po.seed = seed;
            const auto r = cross_check(a, fam.get(), fam.idx, po, false);
            emit_json(o, out, envelope("cross-check", man, cross_check_to_json(r)));
            if (r.agreement == Agreement::disagree) {
                err << "disagreement: lemma " << r.lemma.str() << " vs pipeline " << r.pipeline.str() << "\n"
                    << r.braiding_dump;
                return kDisagree;
            }
            return kOk;
        };
    });
    auto* sw = cls->add_subcommand("sweep", "Lemma verdicts over an index box");
    add_params(sw, o);
    sw->add_option("--preset", preset, "ufo8-D | ufo8-E | a preset JSON path");
    sw->add_option("--family", fam.family);
    sw->add_option("--i", explicit_spec.fixed.i);
    sw->add_option("--j", explicit_spec.fixed.j);
    sw->add_option("--p", explicit_spec.fixed.p);
    sw->add_option("--k-min", explicit_spec.k_min)->capture_default_str();
    sw->add_option("--k-max", explicit_spec.k_max);
    sw->add_option("--s-min", explicit_spec.s_min)->capture_default_str();
    sw->add_option("--s-max", explicit_spec.s_max);
    sw->add_option("--t-min", explicit_spec.t_min)->capture_default_str();
    sw->add_option("--t-max", explicit_spec.t_max);
    sw->add_option("--predicate", predicate, "all | finite | infinite | unknown | matches:TAG")->capture_default_str();
    add_output(sw, o, true);
    sw->callback([&] {
        if (sw->get_option("--format")->count() == 0) o.format = "csv";
        action = [&] {
            SweepSpec spec;
            Manifest man;
            man.command = "classify sweep";
            if (!preset.empty()) {
                spec = load_preset(preset).spec;
                man.params = {{"preset", preset}};
            } else {
                if (fam.family.empty()) throw CLI::RequiredError("--family or --preset");
                spec = explicit_spec;
                spec.family = fam.get();
                spec.params = o.params();
                spec.predicate = predicate_from_name(predicate);
                const auto span = [](int lo, int hi) { return json::array({lo, hi}); };
                man.params = manifest_for("", o).params;
                man.params["family"] = fam.family;
                man.params["ranges"] = {{"k", span(spec.k_min, spec.k_max)},
                                        {"s", span(spec.s_min, spec.s_max)},
                                        {"t", span(spec.t_min, spec.t_max)}};
                man.params["predicate"] = predicate;
            }
            const auto rs = sweep(spec);
            switch (format_from_name(o.format)) {
                case OutputFormat::csv: emit(o, out, sweep_csv(rs)); break;
                case OutputFormat::markdown: emit(o, out, sweep_markdown(rs)); break;
                case OutputFormat::json: emit_json(o, out, envelope("sweep", man, sweep_to_json(rs))); break;
            }
            return kOk;
        };
    });

    // nichols
    auto* nic = app.add_subcommand("nichols", "Nichols algebra computations")->require_subcommand(1);
    auto* dims = nic->add_subcommand("dims", "Graded dimensions from symmetrizer ranks");
    add_params(dims, o);
    add_family(dims, fam, false);
    add_output(dims, o);
    dims->add_option("--in", in, "braiding JSON instead of a family");
    dims->add_option("--kmax", kmax)->capture_default_str();
    dims->add_option("--engine", engine_str, "exact | modular | sketch")->capture_default_str();
    dims->add_option("--seed", seed)->capture_default_str();
    dims->callback([&] {
        action = [&] {
            Manifest man = manifest_for("nichols dims", o);
            const auto b = load_braiding(in, o, fam, man);
            HilbertOptions ho;
            ho.kmax = kmax;
            ho.engine = engine_from_name(engine_str);
            ho.dims.seed = seed;
            man.engine = engine_str;
            man.seeds["engine"] = seed;
            const auto r = hilbert_report(b, ho);
            emit_json(o, out, envelope("hilbert", man, hilbert_to_json(r)));
            return kOk;
        };
    });
    auto* chk = nic->add_subcommand("check-relations", "Test that relations lie in the symmetrizer kernel");
    add_params(chk, o);
    add_family(chk, fam, false);
    add_output(chk, o);
    chk->add_option("--in", in, "braiding JSON instead of a family");
    chk->add_option("--relations", relations, "relation file or bundled name (I_n2, I_n2_u, K_n2, K_n3)");
    chk->add_option("--bind", binds, "name=order:exp, overrides the family's scalars");
    chk->callback([&] {
        action = [&] {
            Manifest man = manifest_for("nichols check-relations", o);
            const auto b = load_braiding(in, o, fam, man);
            std::map<std::string, Cyc> bindings;
            if (in.empty()) bindings = relation_bindings(fam.get(), o.params(), fam.idx);
            for (const auto& s : binds) {
                auto [k, v] = parse_binding(s);
                bindings.insert_or_assign(k, v);
            }
            if (relations.empty()) {
                if (!in.empty()) throw ParseError("--relations is required with --in");
                relations = default_relations(fam.get(), o.n);
            }
            const std::string path = resolve_data_file(relations, "relations", ".rel");
            const auto rels = parse_relations(read_file(path), b, bindings);
            json rows = json::array();
            bool all = true;
            for (const auto& r : rels) {
                const bool ok = relation_in_kernel(b, r.element);
                all = all && ok;
                rows.push_back({{"line", r.line}, {"relation", r.text}, {"in_kernel", ok}, {"provenance", "exact"}});
            }
            json bj = json::object();
            for (const auto& [k, v] : bindings) bj[k] = scalar_to_json(v);
            man.params["relations"] = fs::path(path).filename().string();
            man.params["bindings"] = bj;
            emit_json(o, out, envelope("relation-check", man, {{"relations", rows}, {"all_in_kernel", all}}));
            return all ? kOk : kDisagree;
        };
    });

    // repro
    auto* rep = app.add_subcommand("repro", "Regenerate a bundled table and compare with its expected rows");
    rep->add_option("preset", preset, "ufo8-tables | ufo8-D | ufo8-E")->required();
    rep->add_option("--out-dir", out_dir, "directory for the regenerated CSV files")->capture_default_str();
    rep->callback([&] {
        action = [&] {
            std::vector<std::string> names;
            const json group = json::parse(read_file(resolve_data_file(preset, "presets", ".json")));
            if (group.contains("group")) names = group.at("group").get<std::vector<std::string>>();
            else names = {preset};
            if (out_dir.empty()) out_dir = ".";
            fs::create_directories(out_dir);
            json report = json::array();
            bool ok = true;
            for (const auto& name : names) {
                const auto p = load_preset(name);
                const auto rs = sweep(p.spec);
                const std::string file = (fs::path(out_dir) / (fs::path(name).stem().string() + ".csv")).string();
                write_atomic(file, sweep_csv(rs));
                auto got = triples(rs), want = p.expected;
                std::sort(want.begin(), want.end());
                std::vector<std::tuple<int, int, int>> missing, extra;
                std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
                std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
                const bool match = missing.empty() && extra.empty();
                ok = ok && match;
                report.push_back({{"preset", name}, {"file", file}, {"rows", rs.size()}, {"match", match},
                                  {"missing", triples_json(missing)}, {"extra", triples_json(extra)},
                                  {"output_digest", digest(sweep_csv(rs))}});
                err << name << ": " << rs.size() << " rows, " << (match ? "matches" : "DIFFERS from")
                    << " the expected table\n";
            }
            Manifest man;
            man.command = "repro";
            man.params = {{"preset", preset}};
            out << envelope("repro", man, report).dump(2) << "\n";
            return ok ? kOk : kDisagree;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }
    try {
        format_from_name(o.format);
        return action ? action() : kUsage;
    } catch (const CLI::RequiredError& e) {
        err << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const Disagreement& e) {
        err << e.what() << "\n";
        return kDisagree;
    } catch (const GapFound& e) {
        err << e.what() << "\n";
        return kAxiom;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kBadInput;
    } catch (const json::exception& e) {
        err << "ParseError: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace nforge::io
