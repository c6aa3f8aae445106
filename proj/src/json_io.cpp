#include "nforge/cli_io.hpp"
#include "nforge/errors.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace nforge::io {

OutputFormat format_from_name(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "markdown" || s == "md") return OutputFormat::markdown;
    throw ParseError("unknown output format '" + s + "'");
}

json scalar_to_json(const Cyc& c) {
    if (auto r = as_root_of_unity(c)) return {{"order", r->order}, {"exp", r->exp}};
    json coords = json::array();
    for (const auto& q : c.coords()) coords.push_back(q.get_str());
    return {{"order", c.order()}, {"coords", coords}};
}

Cyc scalar_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order")) throw ParseError("scalar must be an object with \"order\"");
    const auto& o = j.at("order");
    if (!o.is_number_integer() || o.get<long>() < 1) throw ParseError("scalar order must be a positive integer");
    const auto M = o.get<unsigned>();
    if (j.contains("exp") && j.size() == 2) {
        if (!j.at("exp").is_number_integer()) throw ParseError("scalar exp must be an integer");
        return Cyc::root(M, j.at("exp").get<long>());
    }
    if (j.contains("coords") && j.size() == 2 && j.at("coords").is_array()) {
        std::vector<mpq_class> c;
        for (const auto& x : j.at("coords")) {
            if (!x.is_string()) throw ParseError("coords must be rational strings");
            mpq_class q;
            if (q.set_str(x.get<std::string>(), 10) != 0) throw ParseError("bad rational '" + x.get<std::string>() + "'");
            q.canonicalize();
            c.push_back(q);
        }
        return Cyc::from_coords(M, std::move(c));
    }
    throw ParseError("scalar must be {\"order\", \"exp\"} (or {\"order\", \"coords\"})");
}

int sign_from_flag(const std::string& s) {
    if (s == "+" || s == "1" || s == "+1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw ParseError("sign flag must be + or -, got '" + s + "'");
}

std::string flag_from_sign(int s) { return s == 1 ? "+" : "-"; }

json params_to_json(const SuzukiParams& p) {
    return {{"N", p.N}, {"n", p.n}, {"mu", flag_from_sign(p.mu)}, {"lambda", flag_from_sign(p.lambda)}};
}

SuzukiParams params_from_json(const json& j) {
    try {
        return SuzukiParams::make(j.at("N").get<int>(), j.at("n").get<int>(),
                                  sign_from_flag(j.at("mu").get<std::string>()),
                                  sign_from_flag(j.at("lambda").get<std::string>()));
    } catch (const json::exception& e) {
        throw ParseError(std::string("params: ") + e.what());
    }
}

json key_to_json(const FamilyKey& k) {
    const auto use = index_use(k.family);
    json j = {{"family", family_name(k.family)}, {"label", k.str()}};
    if (use.i) j["i"] = k.idx.i;
    if (use.j) j["j"] = k.idx.j;
    if (use.k) j["k"] = k.idx.k;
    if (use.p) j["p"] = k.idx.p;
    if (use.s) j["s"] = k.idx.s;
    if (use.t) j["t"] = k.idx.t;
    return j;
}

json braiding_to_json(const BraidedSpace& b) {
    json labels = json::array(), terms = json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) labels.push_back(b.label(i));
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (const auto& t : b.image(i, j))
                terms.push_back({{"i", i}, {"j", j}, {"k", t.k}, {"l", t.l}, {"coeff", scalar_to_json(t.coeff)}});
    return {{"format", kFormat}, {"kind", "braiding"}, {"dim", b.dim()}, {"order", b.order()}, {"labels", labels},
            {"terms", terms}};
}

BraidedSpace braiding_from_json(const json& in) {
    try {
        const json& j = in.contains("body") && in.at("body").contains("braiding") ? in.at("body").at("braiding") : in;
        if (j.value("format", std::string(kFormat)) != kFormat) throw ParseError("unsupported format tag");
        const auto d = j.at("dim").get<std::size_t>();
        const auto M = j.at("order").get<unsigned>();
        if (d == 0 || M == 0) throw ParseError("braiding needs dim >= 1 and order >= 1");
        BraidedSpace b(d, M);
        for (const auto& t : j.at("terms")) {
            const auto i = t.at("i").get<std::size_t>(), jj = t.at("j").get<std::size_t>(),
                       k = t.at("k").get<std::size_t>(), l = t.at("l").get<std::size_t>();
            if (i >= d || jj >= d || k >= d || l >= d) throw ParseError("braiding term index out of range");
            const Cyc c = scalar_from_json(t.at("coeff"));
            if (M % c.order() != 0) throw ParseError("coefficient order does not divide the braiding order");
            b.add(i, jj, k, l, c);
        }
        if (j.contains("labels"))
            for (const auto& l : j.at("labels")) b.labels.push_back(l.get<std::string>());
        if (!b.labels.empty() && b.labels.size() != d) throw ParseError("label count differs from dim");
        return b;
    } catch (const json::exception& e) {
        throw ParseError(std::string("braiding: ") + e.what());
    }
}

json verdict_to_json(const DimVerdict& v) {
    json j = {{"outcome", outcome_name(v.outcome)}, {"type_tag", tag_name(v.tag)}, {"reason", v.reason},
              {"provenance", v.provenance}};
    if (v.outcome == Outcome::finite) {
        if (v.dim) j["dim"] = *v.dim;
        else j["dim"] = "type-only";
    }
    if (v.necessary_condition) j["necessary_condition"] = true;
    if (!v.matches.empty()) {
        json m = json::array();
        for (auto t : v.matches) m.push_back(tag_name(t));
        j["matches"] = m;
    }
    if (v.diagram) j["diagram"] = v.diagram->str();
    return j;
}

DimVerdict verdict_from_json(const json& j) {
    try {
        DimVerdict v;
        const auto o = outcome_from_name(j.at("outcome").get<std::string>());
        const auto t = tag_from_name(j.at("type_tag").get<std::string>());
        if (!o || !t) throw ParseError("unknown outcome or type tag");
        v.outcome = *o;
        v.tag = *t;
        v.reason = j.value("reason", "");
        v.provenance = j.value("provenance", "lemma");
        v.necessary_condition = j.value("necessary_condition", false);
        if (j.contains("dim") && j.at("dim").is_number_unsigned()) v.dim = j.at("dim").get<unsigned long>();
        if (j.contains("matches"))
            for (const auto& m : j.at("matches")) {
                const auto mt = tag_from_name(m.get<std::string>());
                if (!mt) throw ParseError("unknown type tag in matches");
                v.matches.push_back(*mt);
            }
        return v;
    } catch (const json::exception& e) {
        throw ParseError(std::string("verdict: ") + e.what());
    }
}

json hopf_to_json(const HopfReport& r) {
    json axioms = json::array();
    for (const auto& a : r.axioms) {
        json x = {{"name", a.name}, {"pass", a.pass}};
        if (!a.pass) x["counterexample"] = a.counterexample;
        axioms.push_back(x);
    }
    return {{"params", params_to_json(r.params)}, {"dim", r.dim}, {"pass", r.pass}, {"axioms", axioms},
            {"provenance", "exact"}};
}

json suzuki_dump_json(const SuzukiAlgebra& a) {
    json basis = json::array(), products = json::array(), coproducts = json::array(), antipode = json::array();
    for (const auto& w : a.basis()) basis.push_back(w.str());
    const auto signed_word = [](const SignedWord& s) -> json {
        if (s.is_zero()) return 0;
        return {{"sign", s.sign}, {"word", s.word.str()}};
    };
    for (const auto& x : a.basis()) {
        json row = json::array();
        for (const auto& y : a.basis()) row.push_back(signed_word(a.product(x, y)));
        products.push_back(row);
        json cp = json::array();
        for (const auto& t : a.coproduct(x)) cp.push_back({{"sign", t.sign}, {"left", t.left.str()}, {"right", t.right.str()}});
        coproducts.push_back(cp);
        antipode.push_back(signed_word(a.antipode(x)));
    }
    json counit = json::array();
    for (const auto& x : a.basis()) counit.push_back(a.counit(x));
    return {{"params", params_to_json(a.params())}, {"dim", a.dim()}, {"basis", basis}, {"products", products},
            {"coproduct", coproducts}, {"counit", counit}, {"antipode", antipode}};
}

namespace {

json matrix_json(const CycMatrix& m) {
    json entries = json::array();
    for (const auto& [rc, v] : m.entries()) entries.push_back({{"row", rc.first}, {"col", rc.second}, {"value", scalar_to_json(v)}});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

}  // namespace

json yd_module_to_json(const YDModule& m) {
    json action = json::object();
    for (Gen g : {Gen::x11, Gen::x12, Gen::x21, Gen::x22}) action[gen_name(g)] = matrix_json(m.act(g));
    json coaction = json::array();
    for (std::size_t v = 0; v < m.coaction.size(); ++v) {
        json terms = json::array();
        for (const auto& t : m.coaction[v]) {
            json coeffs = json::array();
            for (const auto& c : t.coeffs) coeffs.push_back(c.is_zero() ? json(0) : scalar_to_json(c));
            terms.push_back({{"word", t.word.str()}, {"coeffs", coeffs}});
        }
        coaction.push_back(terms);
    }
    return {{"params", params_to_json(m.params)}, {"key", key_to_json(m.key)}, {"dim", m.dim},
            {"labels", m.labels},          {"simple_module", m.base.label()}, {"action", action},
            {"coaction", coaction}};
}

json census_to_json(const SuzukiParams& p, const CensusCounts& c) {
    return {{"params", {{"N", p.N}, {"n", p.n}}},
            {"one_dim", {{"count", c.one_dim}, {"expected", c.expected_one}}},
            {"two_dim", {{"count", c.two_dim}, {"expected", c.expected_two}}},
            {"twon_dim", {{"count", c.twon_dim}, {"expected", c.expected_twon}}},
            {"weighted_sum", c.weighted_sum},
            {"expected_square", c.expected_square},
            {"pass", c.pass()},
            {"provenance", "exact"}};
}

std::string census_markdown(const SuzukiParams& p, const CensusCounts& c) {
    std::ostringstream os;
    os << "| dimension | count | expected |\n|---|---|---|\n";
    os << "| 1 | " << c.one_dim << " | " << c.expected_one << " |\n";
    os << "| 2 | " << c.two_dim << " | " << c.expected_two << " |\n";
    os << "| " << 2 * p.n << " | " << c.twon_dim << " | " << c.expected_twon << " |\n";
    os << "\nsum of dim^2 over simple objects: " << c.weighted_sum << " (expected (8Nn)^2 = " << c.expected_square
       << "), " << (c.pass() ? "pass" : "FAIL") << "\n";
    return os.str();
}

json decomposition_to_json(const Decomposition& d) {
    json parts = json::array();
    for (const auto& c : d.parts)
        parts.push_back({{"printed", c.printed.str()},
                         {"canonical", c.canonical.str()},
                         {"resolved", c.resolved.str()},
                         {"by_search", c.by_search},
                         {"dim", c.dim}});
    return {{"simple_module", d.simple.label()}, {"box_dim", d.box_dim}, {"total", d.total}, {"parts", parts},
            {"notes", d.notes}};
}

json hilbert_to_json(const HilbertReport& r) {
    json j = {{"dims", r.dims.dims},
              {"partial_sums", r.partial_sums},
              {"engine", engine_name(r.dims.engine)},
              {"terminated", r.dims.terminated},
              {"provenance", r.provenance},
              {"primes", r.dims.primes}};
    json lb = json::array();
    for (bool b : r.dims.lower_bound) lb.push_back(b);
    j["lower_bound"] = lb;
    if (r.dims.terminated) j["total"] = r.dims.total();
    if (r.series_match) j["series_match"] = *r.series_match;
    return j;
}

json cross_check_to_json(const CrossCheckReport& r) {
    json j = {{"params", params_to_json(r.params)},
              {"key", key_to_json(r.key)},
              {"lemma", verdict_to_json(r.lemma)},
              {"pipeline", verdict_to_json(r.pipeline)},
              {"agreement", agreement_name(r.agreement)}};
    if (r.confirmation) j["confirmation"] = {{"dims", r.confirmation->dims}, {"primes", r.confirmation->primes},
                                             {"provenance", "modular-confirmed"}};
    if (!r.braiding_dump.empty()) j["braiding"] = r.braiding_dump;
    return j;
}

json sweep_to_json(const std::vector<SweepRecord>& records) {
    json rows = json::array();
    for (const auto& r : records) rows.push_back({{"k", r.k}, {"s", r.s}, {"t", r.t}, {"verdict", verdict_to_json(r.verdict)}});
    return rows;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream os;
    os << "k,s,t,verdict,type_tag,reason\n";
    for (const auto& r : records)
        os << r.k << "," << r.s << "," << r.t << "," << csv_field(r.verdict.str()) << "," << tag_name(r.verdict.tag)
           << "," << csv_field(r.verdict.reason) << "\n";
    return os.str();
}

std::string sweep_markdown(const std::vector<SweepRecord>& records) {
    std::ostringstream os;
    os << "| k | s | t | verdict | type | reason |\n|---|---|---|---|---|---|\n";
    for (const auto& r : records)
        os << "| " << r.k << " | " << r.s << " | " << r.t << " | " << r.verdict.str() << " | " << tag_name(r.verdict.tag)
           << " | " << r.verdict.reason << " |\n";
    return os.str();
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

json Manifest::to_json() const {
    json j = {{"command", command}, {"params", params}, {"seeds", seeds}, {"tool_version", kToolVersion}};
    if (!engine.empty()) j["engine"] = engine;
    if (!input_digest.empty()) j["input_digest"] = input_digest;
    return j;
}

json envelope(const std::string& kind, const Manifest& m, json body) {
    json man = m.to_json();
    man["output_digest"] = digest(body.dump());
    return {{"format", kFormat}, {"kind", kind}, {"manifest", man}, {"body", std::move(body)}};
}

void write_atomic(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ParseError("cannot write " + tmp);
        out << bytes;
        if (!out) throw ParseError("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw ParseError("cannot rename " + tmp + " to " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data_dir() {
    if (const char* env = std::getenv("NFORGE_DATA_DIR")) return env;
#ifdef NFORGE_DATA_DIR
    return NFORGE_DATA_DIR;
#else
    return "data";
#endif
}

}  // namespace nforge::io
