#include <berge/error.hpp>
#include <berge/io.hpp>

#include <fstream>
#include <sstream>

namespace berge {

namespace {

[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorCode::malformed_input, what);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        malformed(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        malformed(std::string("missing field '") + key + "'");
    return *it;
}

template <typename T>
T get_as(const Json& j, const char* key)
{
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception&) {
        malformed(std::string("field '") + key + "' has the wrong type");
    }
}

std::vector<std::pair<int, int>> pair_list(const Json& j, const char* key)
{
    const Json& list = field(j, key);
    if (!list.is_array())
        malformed(std::string("field '") + key + "' must be an array");
    std::vector<std::pair<int, int>> out;
    for (const auto& item : list) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
            malformed(std::string("entries of '") + key + "' must be [integer, integer] pairs");
        out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
}

} // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::malformed_input, std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

Json to_json(const Hypergraph& h)
{
    Json edges = Json::array();
    for (const auto& e : h.edges())
        edges.push_back(e.elements());
    return Json{{"n", h.vertex_count()}, {"r", h.uniformity()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const Json& j)
{
    const int n = get_as<int>(j, "n");
    const int r = get_as<int>(j, "r");
    const Json& list = field(j, "edges");
    if (!list.is_array())
        malformed("field 'edges' must be an array");
    std::vector<std::vector<Vertex>> edges;
    for (const auto& e : list) {
        if (!e.is_array())
            malformed("every edge must be an array of vertices");
        std::vector<Vertex> vs;
        for (const auto& v : e) {
            if (!v.is_number_integer())
                malformed("edge entries must be integers");
            vs.push_back(v.get<Vertex>());
        }
        edges.push_back(std::move(vs));
    }
    return Hypergraph::create(n, r, edges);
}

std::string serialize(const Hypergraph& h)
{
    return to_json(h).dump();
}

Hypergraph parse_hypergraph(std::string_view text)
{
    return hypergraph_from_json(parse_json(text));
}

Json to_json(const BergeWitness& w)
{
    Json vm = Json::array(), em = Json::array();
    for (std::size_t i = 0; i < w.vertex_map.size(); ++i)
        vm.push_back({static_cast<int>(i), w.vertex_map[i]});
    for (std::size_t i = 0; i < w.edge_map.size(); ++i)
        em.push_back({static_cast<int>(i), w.edge_map[i]});
    return Json{{"vertex_map", std::move(vm)}, {"edge_map", std::move(em)}};
}

BergeWitness witness_from_json(const Json& j)
{
    auto fill = [](const std::vector<std::pair<int, int>>& pairs, const char* key) {
        std::vector<int> out(pairs.size(), -1);
        for (auto [from, to] : pairs) {
            if (from < 0 || from >= static_cast<int>(pairs.size()) || out[from] != -1)
                malformed(std::string("'") + key + "' must list each index 0..m-1 exactly once");
            out[from] = to;
        }
        return out;
    };
    BergeWitness w;
    w.vertex_map = fill(pair_list(j, "vertex_map"), "vertex_map");
    w.edge_map = fill(pair_list(j, "edge_map"), "edge_map");
    return w;
}

Json rational_to_json(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1) {
        const Integer v = boost::multiprecision::numerator(q);
        if (v >= INT64_MIN && v <= INT64_MAX)
            return v.convert_to<std::int64_t>();
    }
    return to_string(q);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(Integer(j.get<std::int64_t>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    malformed("expected an integer or a \"p/q\" string");
}

namespace {

Json optional_rational(const std::optional<Rational>& q)
{
    return q ? rational_to_json(*q) : Json(nullptr);
}

std::optional<Rational> optional_rational_from(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (v.is_null())
        return std::nullopt;
    return rational_from_json(v);
}

} // namespace

Json to_json(const BoundResult& b)
{
    Json terms = Json::array();
    for (const auto& t : b.terms)
        terms.push_back({{"name", t.name}, {"kind", to_string(t.kind)}, {"value", rational_to_json(t.value)},
            {"valid_for_all_n", t.valid_for_all_n}});
    return Json{{"theorem_id", b.theorem_id}, {"applicable", b.applicable}, {"reason", b.reason},
        {"kind", to_string(b.kind)}, {"value", optional_rational(b.value)},
        {"value_high", optional_rational(b.value_high)}, {"terms", std::move(terms)}, {"hypotheses", b.hypotheses},
        {"valid_for_all_n", b.valid_for_all_n}, {"formula_value", optional_rational(b.formula_value)}};
}

BoundResult bound_from_json(const Json& j)
{
    BoundResult b;
    b.theorem_id = get_as<std::string>(j, "theorem_id");
    b.applicable = get_as<bool>(j, "applicable");
    b.reason = get_as<std::string>(j, "reason");
    b.kind = parse_bound_kind(get_as<std::string>(j, "kind"));
    b.value = optional_rational_from(j, "value");
    b.value_high = optional_rational_from(j, "value_high");
    for (const auto& t : field(j, "terms"))
        b.terms.push_back({get_as<std::string>(t, "name"), parse_bound_kind(get_as<std::string>(t, "kind")),
            rational_from_json(field(t, "value")), get_as<bool>(t, "valid_for_all_n")});
    b.hypotheses = get_as<std::vector<std::string>>(j, "hypotheses");
    b.valid_for_all_n = get_as<bool>(j, "valid_for_all_n");
    b.formula_value = optional_rational_from(j, "formula_value");
    return b;
}

Json to_json(const ConstructionReport& c)
{
    Json params = Json::object();
    for (const auto& [k, v] : c.params)
        params[k] = v;
    return Json{{"family", c.family}, {"params", std::move(params)}, {"in_regime", c.in_regime},
        {"predicted_count", rational_to_json(Rational(c.predicted_count))}, {"hypergraph", to_json(c.hypergraph)},
        {"freeness_target", c.freeness_target ? Json(c.freeness_target->to_string()) : Json(nullptr)},
        {"claims_connected", c.claims_connected}};
}

ConstructionReport construction_from_json(const Json& j)
{
    ConstructionReport c;
    c.family = get_as<std::string>(j, "family");
    c.params = get_as<ParamMap>(j, "params");
    c.in_regime = get_as<bool>(j, "in_regime");
    const Rational count = rational_from_json(field(j, "predicted_count"));
    if (boost::multiprecision::denominator(count) != 1)
        malformed("predicted_count must be an integer");
    c.predicted_count = boost::multiprecision::numerator(count);
    c.hypergraph = hypergraph_from_json(field(j, "hypergraph"));
    const Json& target = field(j, "freeness_target");
    if (!target.is_null())
        c.freeness_target = FamilySpec::parse(get_as<std::string>(j, "freeness_target"));
    c.claims_connected = get_as<bool>(j, "claims_connected");
    return c;
}

Json to_json(const SearchOutcome& s, bool include_timing)
{
    Json stats = {{"nodes", s.stats.nodes}, {"containment_prunes", s.stats.containment_prunes},
        {"bound_prunes", s.stats.bound_prunes}, {"isomorphism_prunes", s.stats.isomorphism_prunes}};
    if (include_timing)
        stats["wall_seconds"] = s.stats.wall_seconds;
    Json out = {{"value", s.value}, {"status", to_string(s.status)},
        {"witness", s.witness ? to_json(*s.witness) : Json(nullptr)}, {"stats", std::move(stats)},
        {"connected", s.connected}, {"infeasible", s.infeasible}};
    if (!s.history.empty())
        out["history"] = s.history;
    return out;
}

SearchOutcome outcome_from_json(const Json& j)
{
    SearchOutcome s;
    s.value = get_as<std::int64_t>(j, "value");
    s.status = parse_search_status(get_as<std::string>(j, "status"));
    const Json& w = field(j, "witness");
    if (!w.is_null())
        s.witness = hypergraph_from_json(w);
    const Json& stats = field(j, "stats");
    s.stats.nodes = get_as<std::uint64_t>(stats, "nodes");
    s.stats.containment_prunes = get_as<std::uint64_t>(stats, "containment_prunes");
    s.stats.bound_prunes = get_as<std::uint64_t>(stats, "bound_prunes");
    s.stats.isomorphism_prunes = get_as<std::uint64_t>(stats, "isomorphism_prunes");
    if (stats.contains("wall_seconds"))
        s.stats.wall_seconds = get_as<double>(stats, "wall_seconds");
    s.connected = get_as<bool>(j, "connected");
    s.infeasible = get_as<bool>(j, "infeasible");
    if (j.contains("history"))
        s.history = get_as<std::vector<std::int64_t>>(j, "history");
    return s;
}

Json to_json(const ReportRow& row)
{
    return Json{{"suite", row.suite}, {"check", row.check}, {"inputs", row.inputs}, {"expected", row.expected},
        {"observed", row.observed}, {"verdict", to_string(row.verdict)}, {"note", row.note}};
}

ReportRow report_row_from_json(const Json& j)
{
    ReportRow row;
    row.suite = get_as<std::string>(j, "suite");
    row.check = get_as<std::string>(j, "check");
    row.inputs = field(j, "inputs");
    row.expected = field(j, "expected");
    row.observed = field(j, "observed");
    const auto verdict = get_as<std::string>(j, "verdict");
    if (verdict == "pass")
        row.verdict = Verdict::pass;
    else if (verdict == "fail")
        row.verdict = Verdict::fail;
    else if (verdict == "report")
        row.verdict = Verdict::report;
    else
        malformed("unknown verdict '" + verdict + "'");
    row.note = get_as<std::string>(j, "note");
    return row;
}

std::string to_json_lines(const SuiteReport& report)
{
    std::string out;
    for (const auto& row : report.rows)
        out += to_json(row).dump() + "\n";
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
}

} // namespace berge
