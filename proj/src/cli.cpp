#include "clutterlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "clutterlab/ehrhart.hpp"
#include "clutterlab/families.hpp"
#include "clutterlab/ideals.hpp"

namespace clutterlab::cli {

Instance Instance::of(SimpleGraph g)
{
    Instance i;
    i.kind = Kind::graph;
    i.graph = std::move(g);
    return i;
}

Instance Instance::of(Clutter c)
{
    Instance i;
    i.kind = Kind::clutter;
    i.clutter = std::move(c);
    return i;
}

Instance Instance::of(LinearSystem s)
{
    Instance i;
    i.kind = Kind::system;
    i.system = std::move(s);
    return i;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what)
{
    throw UsageError("input " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const json& field(const json& doc, const char* key)
{
    if (!doc.contains(key))
        schema_error("", std::string("missing key \"") + key + "\"");
    return doc.at(key);
}

long as_long(const json& v, const std::string& ptr)
{
    if (!v.is_number_integer())
        schema_error(ptr, "expected an integer, found " + std::string(v.type_name()));
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<long>::max()))
        schema_error(ptr, "integer out of range");
    return v.get<long>();
}

const json& as_array(const json& v, const std::string& ptr)
{
    if (!v.is_array())
        schema_error(ptr, "expected an array, found " + std::string(v.type_name()));
    return v;
}

std::size_t parse_n(const json& doc)
{
    const long n = as_long(field(doc, "n"), "/n");
    if (n < 0 || n > 64)
        schema_error("/n", "vertex count must be in 0..64");
    return static_cast<std::size_t>(n);
}

int vertex(const json& v, const std::string& ptr, std::size_t n)
{
    const long x = as_long(v, ptr);
    if (x < 0 || static_cast<std::size_t>(x) >= n)
        schema_error(ptr, "vertex " + std::to_string(x) + " outside 0.." + std::to_string(static_cast<long>(n) - 1));
    return static_cast<int>(x);
}

Instance parse_graph(const json& doc)
{
    const std::size_t n = parse_n(doc);
    const json& edges = as_array(field(doc, "edges"), "/edges");
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> list;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string ptr = "/edges/" + std::to_string(k);
        const json& e = as_array(edges[k], ptr);
        if (e.size() != 2)
            schema_error(ptr, "a graph edge has exactly two vertices");
        int u = vertex(e[0], ptr + "/0", n);
        int v = vertex(e[1], ptr + "/1", n);
        if (u == v)
            schema_error(ptr, "loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (!seen.emplace(u, v).second)
            schema_error(ptr, "repeated edge");
        list.emplace_back(u, v);
    }
    return Instance::of(SimpleGraph(n, list));
}

Instance parse_clutter(const json& doc)
{
    const std::size_t n = parse_n(doc);
    const json& edges = as_array(field(doc, "edges"), "/edges");
    std::vector<VertexSet> list;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string ptr = "/edges/" + std::to_string(k);
        const json& e = as_array(edges[k], ptr);
        if (e.empty())
            schema_error(ptr, "empty edge");
        VertexSet s;
        for (std::size_t t = 0; t < e.size(); ++t)
            s.push_back(vertex(e[t], ptr + "/" + std::to_string(t), n));
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            schema_error(ptr, "repeated vertex in an edge");
        list.push_back(s);
    }
    try {
        return Instance::of(Clutter(n, list));
    } catch (const UsageError& e) {
        schema_error("/edges", e.what());
    }
}

Instance parse_system(const json& doc)
{
    const json& cols = as_array(field(doc, "columns"), "/columns");
    const json& w = as_array(field(doc, "w"), "/w");
    if (cols.empty())
        schema_error("/columns", "at least one column is required");
    if (cols.size() != w.size())
        schema_error("/w", "length " + std::to_string(w.size()) + " differs from the " + std::to_string(cols.size()) +
                               " columns");
    std::vector<IntVector> columns;
    IntVector rhs;
    std::size_t n = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const std::string ptr = "/columns/" + std::to_string(k);
        const json& c = as_array(cols[k], ptr);
        if (k == 0)
            n = c.size();
        if (c.size() != n || n == 0)
            schema_error(ptr, "columns must share a positive length");
        IntVector v;
        bool zero = true;
        for (std::size_t t = 0; t < c.size(); ++t) {
            v.emplace_back(as_long(c[t], ptr + "/" + std::to_string(t)));
            zero = zero && v.back() == 0;
        }
        if (zero)
            schema_error(ptr, "zero column");
        columns.push_back(v);
        rhs.emplace_back(as_long(w[k], "/w/" + std::to_string(k)));
    }
    return Instance::of(LinearSystem(n, columns, rhs));
}

} // namespace

Instance parse_instance(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        schema_error("", "expected an object");
    const json& kind = field(doc, "kind");
    if (!kind.is_string())
        schema_error("/kind", "expected a string");
    const auto k = kind.get<std::string>();
    if (k == "graph")
        return parse_graph(doc);
    if (k == "clutter")
        return parse_clutter(doc);
    if (k == "system")
        return parse_system(doc);
    schema_error("/kind", "unknown kind \"" + k + "\" (graph, clutter or system)");
}

Instance load_instance(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_instance(ss.str());
    } catch (const UsageError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// serialization

json to_json(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

json to_json(const IntVector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

json to_json(const RatVector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(x.get_str());
    return a;
}

namespace {

json set_json(const VertexSet& s)
{
    json a = json::array();
    for (int v : s)
        a.push_back(v);
    return a;
}

} // namespace

json instance_to_json(const Instance& inst)
{
    json j;
    switch (inst.kind) {
    case Instance::Kind::graph: {
        j["kind"] = "graph";
        j["n"] = inst.graph.n();
        auto edges = inst.graph.edges();
        std::sort(edges.begin(), edges.end());
        json a = json::array();
        for (auto [u, v] : edges)
            a.push_back({std::min(u, v), std::max(u, v)});
        j["edges"] = a;
        break;
    }
    case Instance::Kind::clutter: {
        j["kind"] = "clutter";
        j["n"] = inst.clutter.n();
        json a = json::array();
        for (const auto& e : inst.clutter.edges())
            a.push_back(set_json(e));
        j["edges"] = a;
        break;
    }
    case Instance::Kind::system: {
        j["kind"] = "system";
        std::vector<std::pair<IntVector, Integer>> pairs;
        for (std::size_t i = 0; i < inst.system.columns.size(); ++i)
            pairs.emplace_back(inst.system.columns[i], inst.system.w[i]);
        std::sort(pairs.begin(), pairs.end());
        json cols = json::array();
        json w = json::array();
        for (const auto& [c, x] : pairs) {
            cols.push_back(to_json(c));
            w.push_back(to_json(x));
        }
        j["columns"] = cols;
        j["w"] = w;
        break;
    }
    }
    return j;
}

std::string canonical_text(const Instance& inst) { return instance_to_json(inst).dump(); }

std::string sha256_hex(std::string_view data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw InternalError("SHA-256 failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

std::string digest(const Instance& inst) { return sha256_hex(canonical_text(inst)); }

json to_json(const Certificate& c)
{
    json j;
    j["schema_version"] = c.schema_version;
    j["command"] = c.command;
    j["digest"] = c.digest;
    j["verdict"] = c.verdict;
    j["witnesses"] = c.witnesses;
    j["invariants"] = c.invariants;
    j["budget"] = {{"limit", c.budget.limit}, {"used", c.budget.used}, {"exhausted", c.budget.exhausted}};
    j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
    if (c.timing_seconds)
        j["timing_seconds"] = *c.timing_seconds;
    return j;
}

Certificate certificate_from_json(const json& j)
{
    try {
        Certificate c;
        c.schema_version = j.at("schema_version").get<int>();
        if (c.schema_version != kSchemaVersion)
            throw UsageError("unsupported certificate schema version " + std::to_string(c.schema_version));
        c.command = j.at("command").get<std::string>();
        c.digest = j.at("digest").get<std::string>();
        c.verdict = j.at("verdict").get<std::string>();
        c.witnesses = j.at("witnesses");
        c.invariants = j.at("invariants");
        const json& b = j.at("budget");
        c.budget = {b.at("limit").get<std::uint64_t>(), b.at("used").get<std::uint64_t>(), b.at("exhausted").get<bool>()};
        if (!j.at("seed").is_null())
            c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("timing_seconds"))
            c.timing_seconds = j.at("timing_seconds").get<double>();
        return c;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed certificate: ") + e.what());
    }
}

std::string emit(const Certificate& c) { return to_json(c).dump(2) + "\n"; }

Certificate parse_certificate(std::string_view text)
{
    try {
        return certificate_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed certificate: ") + e.what());
    }
}

int exit_code(const Certificate& c)
{
    if (c.verdict == "holds")
        return exit_holds;
    if (c.verdict == "fails")
        return exit_fails;
    if (c.verdict == "undecided")
        return exit_undecided;
    throw InternalError("unknown verdict " + c.verdict);
}

// ---------------------------------------------------------------------------
// check

const std::vector<std::string>& property_names()
{
    static const std::vector<std::string> names{"ehrhart", "ideal",   "mfmc",    "tdi",  "meyniel", "perfect",
                                                "unmixed", "uniform", "konig",   "ntf",  "normal"};
    return names;
}

namespace {

using Clock = std::chrono::steady_clock;

const char* holds(bool b) { return b ? "holds" : "fails"; }

Clutter clutter_of(const Instance& inst, const CheckOptions& opts)
{
    switch (inst.kind) {
    case Instance::Kind::clutter:
        return inst.clutter;
    case Instance::Kind::graph:
        return opts.edge_clutter ? graph_clutter(inst.graph) : clique_clutter(inst.graph);
    case Instance::Kind::system:
        break;
    }
    throw UsageError("this command needs a graph or clutter instance");
}

const SimpleGraph& graph_of(const Instance& inst)
{
    if (inst.kind != Instance::Kind::graph)
        throw UsageError("this property needs a graph instance");
    return inst.graph;
}

json face_json(const FaceRecord& f)
{
    json missing = json::array();
    for (const auto& m : f.missing)
        missing.push_back(to_json(m));
    json active = json::array();
    for (auto a : f.active)
        active.push_back(a);
    return {{"point", to_json(f.point)}, {"active", active}, {"hilbert_basis", f.hilbert_basis}, {"missing", missing}};
}

void tdi_into(Certificate& cert, const TdiCertificate& t)
{
    cert.invariants["tdi_verdict"] = to_string(t.verdict);
    cert.invariants["minimal_faces_examined"] = t.faces.size();
    switch (t.verdict) {
    case TdiVerdict::tdi:
        cert.verdict = "holds";
        break;
    case TdiVerdict::vacuous:
        cert.verdict = "holds";
        cert.witnesses["note"] = "empty polyhedron";
        break;
    case TdiVerdict::not_tdi:
        cert.verdict = "fails";
        cert.witnesses["failing_face"] = face_json(t.faces.back());
        break;
    case TdiVerdict::undecided:
        cert.verdict = "undecided";
        cert.witnesses["note"] = t.note;
        break;
    }
}

void power_into(Certificate& cert, const PowerCheck& p, const char* key)
{
    json j = {{"holds", p.holds}, {"bound", p.bound}};
    if (!p.holds) {
        j["failing_power"] = *p.failing_power;
        j["witness"] = to_json(*p.witness);
    }
    cert.invariants[key] = j;
}

void check_into(Certificate& cert, const std::string& prop, const Instance& inst, const CheckOptions& opts,
                StepBudget& budget)
{
    if (prop == "meyniel") {
        const auto rep = is_meyniel(graph_of(inst), budget);
        cert.verdict = holds(rep.meyniel);
        if (rep.witness)
            cert.witnesses["odd_cycle"] = {{"cycle", set_json(rep.witness->cycle)}, {"chords", rep.witness->chords}};
        return;
    }
    if (prop == "perfect") {
        const auto rep = is_perfect_small(graph_of(inst));
        cert.verdict = holds(rep.perfect);
        if (rep.odd_hole)
            cert.witnesses["odd_hole"] = set_json(*rep.odd_hole);
        if (rep.odd_antihole)
            cert.witnesses["odd_antihole"] = set_json(*rep.odd_antihole);
        return;
    }
    if (prop == "tdi") {
        switch (inst.kind) {
        case Instance::Kind::system:
            tdi_into(cert, is_tdi(inst.system, budget));
            return;
        case Instance::Kind::graph:
            cert.invariants["system"] = "stable set polytope";
            tdi_into(cert, is_tdi(stab_system(inst.graph), budget));
            return;
        case Instance::Kind::clutter:
            cert.invariants["system"] = "set covering polyhedron";
            tdi_into(cert, is_tdi(mfmc_system(inst.clutter), budget));
            return;
        }
    }

    const Clutter c = clutter_of(inst, opts);
    if (inst.kind == Instance::Kind::graph)
        cert.invariants["clutter"] = opts.edge_clutter ? "edges" : "cliques";
    if (prop == "ehrhart") {
        const auto rep = is_ehrhart_clutter(c, budget);
        cert.verdict = holds(rep.ehrhart);
        if (rep.witness)
            cert.witnesses["hilbert_basis_gap"] = to_json(*rep.witness);
    } else if (prop == "ideal") {
        const auto rep = is_ideal_clutter(c);
        cert.verdict = holds(rep.ideal);
        if (rep.fractional_vertex)
            cert.witnesses["fractional_vertex"] = to_json(*rep.fractional_vertex);
    } else if (prop == "mfmc") {
        const auto rep = is_mfmc(c, MfmcOptions{}, budget);
        tdi_into(cert, rep.certificate);
        const auto& ev = rep.evidence;
        json e = {{"performed", ev.performed}, {"max_entry", ev.max_entry}, {"instances", ev.instances},
                  {"all_integral", ev.all_integral}};
        if (ev.counterexample_w)
            e["counterexample_w"] = to_json(*ev.counterexample_w);
        cert.invariants["ilp_scan"] = e;
    } else if (prop == "unmixed" || prop == "konig") {
        const Clutter b = blocker(c);
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b.edges()[i].size() < b.edges()[lo].size())
                lo = i;
            if (b.edges()[i].size() > b.edges()[hi].size())
                hi = i;
        }
        if (prop == "unmixed") {
            cert.verdict = holds(b.size() == 0 || b.edges()[lo].size() == b.edges()[hi].size());
            if (cert.verdict == "fails")
                cert.witnesses["covers"] = {set_json(b.edges()[lo]), set_json(b.edges()[hi])};
        } else {
            const auto g = covering_number(c);
            const auto nu = max_disjoint_edges(c);
            cert.verdict = holds(g == nu);
            cert.invariants["covering_number"] = g;
            cert.invariants["max_disjoint_edges"] = nu;
            if (b.size() > 0)
                cert.witnesses["minimum_cover"] = set_json(b.edges()[lo]);
        }
    } else if (prop == "uniform") {
        const auto d = is_uniform(c);
        cert.verdict = holds(d.has_value());
        if (d) {
            cert.invariants["d"] = *d;
        } else {
            auto by = [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); };
            const auto [lo, hi] = std::minmax_element(c.edges().begin(), c.edges().end(), by);
            cert.witnesses["edges"] = {set_json(*lo), set_json(*hi)};
        }
    } else if (prop == "ntf") {
        const auto rep = is_ntf_upto(c, opts.r, budget);
        cert.verdict = holds(rep.holds);
        power_into(cert, rep, "power_vs_symbolic");
        if (!rep.holds)
            cert.witnesses["monomial"] = {{"power", *rep.failing_power}, {"exponent", to_json(*rep.witness)}};
    } else if (prop == "normal") {
        const auto rep = is_normal_upto(c, opts.r, budget);
        cert.verdict = holds(rep.normal.holds);
        power_into(cert, rep.normal, "power_vs_closure");
        power_into(cert, rep.closure_symbolic, "closure_vs_symbolic");
        if (!rep.normal.holds)
            cert.witnesses["monomial"] = {{"power", *rep.normal.failing_power},
                                          {"exponent", to_json(*rep.normal.witness)}};
    } else {
        throw UsageError("unknown property \"" + prop + "\"");
    }
}

template <typename F>
Certificate run_timed(const std::string& command, const std::string& dig, bool timing, std::optional<std::uint64_t> limit,
                      F&& body)
{
    Certificate cert;
    cert.command = command;
    cert.digest = dig;
    StepBudget budget(limit.value_or(StepBudget::default_steps()));
    const auto start = Clock::now();
    try {
        body(cert, budget);
    } catch (const ResourceExceeded& e) {
        cert.verdict = "undecided";
        cert.witnesses = json::object();
        cert.witnesses["note"] = e.what();
        cert.budget.exhausted = true;
    }
    cert.budget.limit = budget.limit();
    cert.budget.used = std::min(budget.used(), budget.limit());
    if (timing)
        cert.timing_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return cert;
}

} // namespace

Certificate run_check(const std::string& property, const Instance& inst, const CheckOptions& opts)
{
    if (std::find(property_names().begin(), property_names().end(), property) == property_names().end())
        throw UsageError("unknown property \"" + property + "\"");
    return run_timed("check " + property, digest(inst), opts.timing, opts.budget,
                     [&](Certificate& cert, StepBudget& budget) {
                         if (property == "ntf" || property == "normal")
                             cert.invariants["r"] = opts.r;
                         check_into(cert, property, inst, opts, budget);
                     });
}

// ---------------------------------------------------------------------------
// invariants

Certificate run_invariants(const Instance& inst, const CheckOptions& opts)
{
    const Clutter c = clutter_of(inst, opts);
    return run_timed("invariants", digest(inst), opts.timing, opts.budget, [&](Certificate& cert, StepBudget&) {
        if (inst.kind == Instance::Kind::graph)
            cert.invariants["clutter"] = opts.edge_clutter ? "edges" : "cliques";
        const auto rep = check_theorem22(c);
        const auto& d = rep.data;
        json h = json::array();
        for (const auto& x : d.hvector)
            h.push_back(to_json(x));
        json L = json::array();
        for (auto x : d.values)
            L.push_back(x);
        cert.invariants["dim"] = d.dim;
        cert.invariants["ehrhart_values"] = L;
        cert.invariants["ehrhart_polynomial"] = to_json(d.polynomial);
        cert.invariants["hvector"] = h;
        cert.invariants["a_invariant"] = d.a_series;
        cert.invariants["a_invariant_interior"] = d.a_interior;
        cert.invariants["regularity"] = d.regularity;
        cert.invariants["g"] = rep.g;
        cert.invariants["d"] = rep.d ? json(*rep.d) : json(nullptr);
        cert.invariants["ehrhart"] = rep.ehrhart;
        cert.invariants["konig"] = rep.konig;
        if (c.n() % 2 == 0)
            cert.invariants["reg_le_half_n_minus_1"] = d.regularity <= static_cast<int>(c.n() / 2) - 1;
        json bounds;
        bounds["hypotheses_met"] = rep.hypotheses_met;
        json unmet = json::array();
        for (const auto& u : rep.unmet)
            unmet.push_back(u);
        bounds["unmet"] = unmet;
        bounds["a_le_minus_g"] = rep.a_bound;
        bounds["a_tight"] = rep.a_tight;
        if (rep.d) {
            bounds["reg_le_(d-1)(g-1)"] = rep.reg_bound;
            bounds["reg_tight"] = rep.reg_tight;
            bounds["rank_le_g+(d-1)(g-1)"] = rep.rank_bound;
        }
        cert.invariants["bounds"] = bounds;
        if (!rep.hypotheses_met) {
            cert.verdict = "holds";
            cert.witnesses["note"] = "hypotheses not met";
        } else {
            cert.verdict = holds(rep.conclusions_hold());
        }
    });
}

// ---------------------------------------------------------------------------
// conjecture batch

const std::vector<std::string>& conjecture_families()
{
    static const std::vector<std::string> names{"bipartite", "chordal", "meyniel-closure", "line-of-bipartite",
                                                "complements"};
    return names;
}

namespace {

SimpleGraph family_member(const std::string& family, std::size_t max_n, std::mt19937_64& rng)
{
    const auto size = [&](long lo, long hi) { return static_cast<std::size_t>(uniform_in(rng, lo, hi)); };
    if (family == "bipartite")
        return random_bipartite(size(2, static_cast<long>(max_n)), rng());
    if (family == "chordal")
        return random_chordal(size(2, static_cast<long>(max_n)), rng());
    if (family == "complements")
        return complement(random_bipartite(size(2, static_cast<long>(max_n)), rng()));
    if (family == "meyniel-closure") {
        const auto n = size(1, static_cast<long>(max_n) - 1);
        const std::uint64_t s = rng();
        return graph_cone(uniform_below(rng, 2) == 0 ? random_chordal(n, s) : random_bipartite(n, s));
    }
    if (family == "line-of-bipartite") {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const auto b = random_bipartite(size(2, static_cast<long>(max_n)), rng());
            const auto m = b.edges().size();
            if (m >= 1 && m <= max_n)
                return line_graph(b);
        }
        return line_graph(path_graph(max_n + 1));
    }
    throw UsageError("unknown family \"" + family + "\"");
}

} // namespace

Certificate run_conjecture(const ConjectureOptions& opts)
{
    if (opts.families.empty())
        throw UsageError("no families given");
    for (const auto& f : opts.families)
        if (std::find(conjecture_families().begin(), conjecture_families().end(), f) == conjecture_families().end())
            throw UsageError("unknown family \"" + f + "\"");
    if (opts.max_n < 2 || opts.max_n > 9)
        throw UsageError("--max-n must be in 2..9");

    json params = {{"families", opts.families}, {"max_n", opts.max_n}, {"seed", opts.seed}, {"per_family", opts.per_family}};
    const auto start = Clock::now();
    Certificate cert;
    cert.command = "conjecture";
    cert.digest = sha256_hex(params.dump());
    cert.seed = opts.seed;
    cert.budget.limit = opts.budget.value_or(StepBudget::default_steps());

    struct Row {
        std::string digest, family;
        json record;
        bool counterexample = false;
        bool undecided = false;
        json graph;
    };
    std::map<std::string, Row> rows; // ordered by instance digest
    std::size_t imperfect = 0;
    for (std::size_t fi = 0; fi < opts.families.size(); ++fi) {
        std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ULL * (fi + 1));
        for (std::size_t k = 0; k < opts.per_family; ++k) {
            const SimpleGraph g = family_member(opts.families[fi], opts.max_n, rng);
            const Instance inst = Instance::of(g);
            const std::string dig = digest(inst);
            if (rows.count(dig))
                continue;
            Row row{dig, opts.families[fi], json::object(), false, false, instance_to_json(inst)};
            if (!is_perfect_small(g).perfect) {
                ++imperfect;
                continue;
            }
            const Clutter cl = clique_clutter(g);
            const bool ideal = is_ideal_clutter(cl).ideal;
            std::string mfmc = "skipped";
            if (ideal) {
                StepBudget budget(cert.budget.limit);
                try {
                    mfmc = to_string(is_mfmc(cl, MfmcOptions{false, 0, 0}, budget).certificate.verdict);
                } catch (const ResourceExceeded&) {
                    mfmc = "undecided";
                }
                cert.budget.used = std::max(cert.budget.used, std::min(budget.used(), budget.limit()));
                row.undecided = mfmc == "undecided";
                row.counterexample = mfmc == "not_tdi";
                if (row.undecided)
                    cert.budget.exhausted = true;
            }
            row.record = {{"digest", dig.substr(0, 16)}, {"family", row.family}, {"n", g.n()},
                          {"ideal", ideal},              {"mfmc", mfmc}};
            rows.emplace(dig, std::move(row));
        }
    }
    json table = json::array();
    json counterexamples = json::array();
    std::size_t ideal_count = 0, undecided = 0;
    for (const auto& [dig, row] : rows) {
        table.push_back(row.record);
        ideal_count += row.record["ideal"].get<bool>() ? 1 : 0;
        undecided += row.undecided ? 1 : 0;
        if (row.counterexample)
            counterexamples.push_back({{"digest", dig}, {"family", row.family}, {"graph", row.graph}});
    }
    cert.invariants["parameters"] = params;
    cert.invariants["instances"] = rows.size();
    cert.invariants["not_perfect_skipped"] = imperfect;
    cert.invariants["ideal"] = ideal_count;
    cert.invariants["undecided"] = undecided;
    cert.invariants["counterexamples"] = counterexamples.size();
    cert.invariants["table"] = table;
    cert.witnesses["counterexamples"] = counterexamples;
    cert.verdict = !counterexamples.empty() ? "fails" : (undecided > 0 ? "undecided" : "holds");
    if (opts.timing)
        cert.timing_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return cert;
}

// ---------------------------------------------------------------------------
// summary

std::string summarize(const Certificate& c)
{
    std::ostringstream out;
    out << c.command << ": " << c.verdict << "\n";
    if (c.command == "conjecture") {
        out << "  " << std::left << std::setw(18) << "digest" << std::setw(20) << "family" << std::setw(4) << "n"
            << std::setw(7) << "ideal" << "mfmc\n";
        for (const auto& r : c.invariants.at("table"))
            out << "  " << std::setw(18) << r.at("digest").get<std::string>() << std::setw(20)
                << r.at("family").get<std::string>() << std::setw(4) << r.at("n").get<std::size_t>() << std::setw(7)
                << (r.at("ideal").get<bool>() ? "yes" : "no") << r.at("mfmc").get<std::string>() << "\n";
        for (const char* k : {"instances", "ideal", "undecided", "counterexamples"})
            out << "  " << k << ": " << c.invariants.at(k).dump() << "\n";
    } else {
        for (const auto& [k, v] : c.invariants.items())
            out << "  " << k << ": " << v.dump() << "\n";
    }
    for (const auto& [k, v] : c.witnesses.items())
        out << "  witness " << k << ": " << v.dump() << "\n";
    if (c.budget.exhausted)
        out << "  step budget of " << c.budget.limit << " exhausted\n";
    if (c.timing_seconds)
        out << "  time: " << *c.timing_seconds << " s\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// examples

const std::vector<std::string>& example_names()
{
    static const std::vector<std::string> names{"line-k24", "sharpness-D-G", "triangle", "c4", "c5",
                                                "nonnormal-chordal"};
    return names;
}

namespace {

ExampleFile instance_file(const std::string& name, const Instance& inst)
{
    return {name, instance_to_json(inst).dump() + "\n"};
}

ExampleFile cert_file(const std::string& name, const Certificate& c) { return {name, emit(c)}; }

} // namespace

std::vector<ExampleFile> make_example(const std::string& name)
{
    std::vector<ExampleFile> files;
    if (name == "line-k24") {
        const auto ex = example_3_9();
        const auto g = Instance::of(ex.graph);
        const auto c = Instance::of(ex.clutter);
        files.push_back(instance_file(name + ".graph.json", g));
        files.push_back(instance_file(name + ".clutter.json", c));
        files.push_back(cert_file(name + ".ehrhart.cert.json", run_check("ehrhart", c)));
        return files;
    }
    if (name.rfind("sharpness-", 0) == 0) {
        std::size_t d = 0, g = 0;
        char dash = 0;
        std::istringstream in(name.substr(10));
        if (!(in >> d >> dash >> g) || dash != '-' || !in.eof())
            throw UsageError("sharpness examples are named sharpness-D-G, e.g. sharpness-2-3");
        const auto c = Instance::of(sharpness_clutter(d, g));
        files.push_back(instance_file(name + ".clutter.json", c));
        files.push_back(cert_file(name + ".invariants.cert.json", run_invariants(c)));
        return files;
    }
    if (name == "triangle") {
        const auto c = Instance::of(triangle_clutter());
        files.push_back(instance_file(name + ".clutter.json", c));
        files.push_back(cert_file(name + ".invariants.cert.json", run_invariants(c)));
        return files;
    }
    if (name == "c4") {
        const auto c = Instance::of(square_clutter());
        files.push_back(instance_file(name + ".clutter.json", c));
        files.push_back(cert_file(name + ".mfmc.cert.json", run_check("mfmc", c)));
        return files;
    }
    if (name == "c5") {
        const auto g = Instance::of(cycle_graph(5));
        files.push_back(instance_file(name + ".graph.json", g));
        files.push_back(cert_file(name + ".meyniel.cert.json", run_check("meyniel", g)));
        return files;
    }
    if (name == "nonnormal-chordal") {
        const auto s = search_nonnormal_chordal(13);
        if (!s.hit)
            throw ResourceExceeded("search for a non-normal chordal graph found nothing within the budget");
        const auto g = Instance::of(s.hit->graph);
        files.push_back(instance_file(name + ".graph.json", g));
        files.push_back(cert_file(name + ".normal.cert.json", run_check("normal", g)));
        return files;
    }
    throw UsageError("unknown example \"" + name + "\"");
}

} // namespace clutterlab::cli
