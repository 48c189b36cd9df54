#include "itcover/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace itcover {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw error("field \"" + field + "\": " + why);
}

const json& expect(const json& j, const std::string& field, json::value_t type,
                   const char* name) {
    if (!j.is_object()) bad_field(field, "expected an object");
    auto it = j.find(field);
    if (it == j.end()) bad_field(field, "missing");
    if (it->type() != type &&
        !(type == json::value_t::number_integer && it->is_number_integer()))
        bad_field(field, std::string("expected ") + name);
    return *it;
}

int expect_int(const json& j, const std::string& field) {
    return expect(j, field, json::value_t::number_integer, "an integer")
        .get<int>();
}

Side expect_side(const json& j, const std::string& field) {
    const json& v = expect(j, field, json::value_t::string, "a string");
    std::string s = v.get<std::string>();
    if (s == "A") return Side::A;
    if (s == "B") return Side::B;
    bad_field(field, "expected \"A\" or \"B\"");
}

const json& expect_array(const json& j, const std::string& field) {
    return expect(j, field, json::value_t::array, "an array");
}

std::vector<int> int_list(const json& arr, const std::string& field) {
    std::vector<int> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& v = arr[i];
        if (!v.is_number_integer())
            bad_field(field + "[" + std::to_string(i) + "]",
                      "expected an integer");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<std::pair<int, int>> pair_list(const json& arr,
                                           const std::string& field) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string at = field + "[" + std::to_string(i) + "]";
        if (!arr[i].is_array() || arr[i].size() != 2)
            bad_field(at, "expected a 2-element array");
        std::vector<int> pair = int_list(arr[i], at);
        out.push_back({pair[0], pair[1]});
    }
    return out;
}

int expect_int_at(const json& j, const std::string& path, const char* key) {
    if (!j.is_object() || !j.contains(key))
        bad_field(path + "." + key, "missing");
    if (!j[key].is_number_integer())
        bad_field(path + "." + key, "expected an integer");
    return j[key].get<int>();
}

Params params_from(const json& obj, const std::string& path) {
    Params p;
    p.ka = expect_int_at(obj, path, "ka");
    p.kb = expect_int_at(obj, path, "kb");
    p.da = expect_int_at(obj, path, "da");
    p.db = expect_int_at(obj, path, "db");
    return p;
}

json params_to(const Params& p) {
    return json{{"ka", p.ka}, {"kb", p.kb}, {"da", p.da}, {"db", p.db}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path.empty()) throw error("empty output path");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path);
    out << text;
    if (!out) throw error("write failed: " + path);
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw error("invalid JSON");
    return j;
}

const char* step_kind_name(TraceStep::Kind k) {
    switch (k) {
        case TraceStep::Kind::Base: return "base";
        case TraceStep::Kind::JoinGadget: return "join_gadget";
        case TraceStep::Kind::JoinSubsystem: return "join_subsystem";
        case TraceStep::Kind::Delete: return "delete";
    }
    throw error("unknown step kind");
}

json step_to(const TraceStep& s) {
    json j{{"kind", step_kind_name(s.kind)}};
    switch (s.kind) {
        case TraceStep::Kind::Base:
            j["p"] = s.p;
            j["q"] = s.q;
            j["a_class"] = s.a_class;
            j["b_class"] = s.b_class;
            break;
        case TraceStep::Kind::JoinGadget:
            j["p"] = s.p;
            j["q"] = s.q;
            j["donor_side"] = side_name(s.donor_side);
            j["kept_class"] = s.kept_class;
            j["assignment"] = json::array();
            for (const auto& [v, c] : s.assignment)
                j["assignment"].push_back({v, c});
            break;
        case TraceStep::Kind::JoinSubsystem:
            j["subsystem"] = s.subsystem;
            j["donor_class"] = s.donor_class;
            j["assignment"] = json::array();
            for (const auto& [v, c] : s.assignment)
                j["assignment"].push_back({v, c});
            break;
        case TraceStep::Kind::Delete:
            j["deleted"] = s.deleted;
            break;
    }
    return j;
}

TraceStep step_from(const json& j, const std::string& at) {
    TraceStep s;
    const json& kind = expect(j, "kind", json::value_t::string, "a string");
    std::string name = kind.get<std::string>();
    if (name == "base") {
        s.kind = TraceStep::Kind::Base;
        s.p = expect_int(j, "p");
        s.q = expect_int(j, "q");
        s.a_class = expect_int(j, "a_class");
        s.b_class = expect_int(j, "b_class");
    } else if (name == "join_gadget") {
        s.kind = TraceStep::Kind::JoinGadget;
        s.p = expect_int(j, "p");
        s.q = expect_int(j, "q");
        s.donor_side = expect_side(j, "donor_side");
        s.kept_class = expect_int(j, "kept_class");
        s.assignment = pair_list(expect_array(j, "assignment"), at + ".assignment");
    } else if (name == "join_subsystem") {
        s.kind = TraceStep::Kind::JoinSubsystem;
        s.subsystem = expect_int(j, "subsystem");
        s.donor_class = expect_int(j, "donor_class");
        s.assignment = pair_list(expect_array(j, "assignment"), at + ".assignment");
    } else if (name == "delete") {
        s.kind = TraceStep::Kind::Delete;
        s.deleted = int_list(expect_array(j, "deleted"), at + ".deleted");
    } else {
        bad_field(at + ".kind", "unknown step kind \"" + name + "\"");
    }
    return s;
}

std::vector<TraceStep> steps_from(const json& arr, const std::string& at) {
    std::vector<TraceStep> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string here = at + "[" + std::to_string(i) + "]";
        if (!arr[i].is_object()) bad_field(here, "expected an object");
        out.push_back(step_from(arr[i], here));
    }
    return out;
}

}  // namespace

GraphDocument graph_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw error("document root must be an object");
    GraphDocument doc;
    const json& classes = expect_array(j, "classes");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::string at = "classes[" + std::to_string(i) + "]";
        if (!classes[i].is_object()) bad_field(at, "expected an object");
        doc.graph.classes.push_back(
            {expect_int(classes[i], "id"), expect_side(classes[i], "side")});
    }
    const json& vertices = expect_array(j, "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::string at = "vertices[" + std::to_string(i) + "]";
        if (!vertices[i].is_object()) bad_field(at, "expected an object");
        doc.graph.vertices.push_back({expect_int(vertices[i], "id"),
                                      expect_side(vertices[i], "side"),
                                      expect_int(vertices[i], "class")});
    }
    doc.graph.edges = pair_list(expect_array(j, "edges"), "edges");
    if (j.contains("params")) {
        if (!j["params"].is_object()) bad_field("params", "expected an object");
        doc.params = params_from(j["params"], "params");
    }
    if (j.contains("pairs")) {
        if (!j["pairs"].is_array()) bad_field("pairs", "expected an array");
        doc.pairs = pair_list(j["pairs"], "pairs");
    }
    if (j.contains("blocks")) {
        if (!j["blocks"].is_array()) bad_field("blocks", "expected an array");
        for (std::size_t i = 0; i < j["blocks"].size(); ++i) {
            std::string at = "blocks[" + std::to_string(i) + "]";
            if (!j["blocks"][i].is_array()) bad_field(at, "expected an array");
            doc.blocks.push_back(int_list(j["blocks"][i], at));
        }
    }
    doc.graph.sort_all();
    require_structure(doc.graph);
    return doc;
}

std::string graph_to_json(const GraphDocument& doc) {
    json j = json::object();
    if (doc.params) j["params"] = params_to(*doc.params);
    j["classes"] = json::array();
    for (const auto& c : doc.graph.classes)
        j["classes"].push_back({{"id", c.id}, {"side", side_name(c.side)}});
    j["vertices"] = json::array();
    for (const auto& v : doc.graph.vertices)
        j["vertices"].push_back(
            {{"id", v.id}, {"side", side_name(v.side)}, {"class", v.cls}});
    j["edges"] = json::array();
    for (const auto& e : doc.graph.edges)
        j["edges"].push_back({e.first, e.second});
    if (!doc.pairs.empty()) {
        j["pairs"] = json::array();
        for (const auto& [x, y] : doc.pairs) j["pairs"].push_back({x, y});
    }
    if (!doc.blocks.empty()) j["blocks"] = doc.blocks;
    return j.dump(2) + "\n";
}

GraphDocument read_graph(const std::string& path) {
    return graph_from_json(read_file(path));
}

void write_graph(const GraphDocument& doc, const std::string& path) {
    write_file(path, graph_to_json(doc));
}

BuildTrace trace_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw error("trace root must be an object");
    BuildTrace t;
    const json& params = expect(j, "params", json::value_t::object, "an object");
    t.params = params_from(params, "params");
    const json& norm =
        expect(j, "normalization", json::value_t::object, "an object");
    if (!norm.contains("swapped") || !norm["swapped"].is_boolean())
        bad_field("normalization.swapped", "expected a boolean");
    t.normalization.swapped = norm["swapped"].get<bool>();
    auto opt_int = [&norm](const char* key) -> std::optional<int> {
        if (!norm.contains(key) || norm[key].is_null()) return std::nullopt;
        if (!norm[key].is_number_integer())
            bad_field(std::string("normalization.") + key,
                      "expected an integer or null");
        return norm[key].get<int>();
    };
    t.normalization.da_clamped_from = opt_int("da_clamped_from");
    t.normalization.db_clamped_from = opt_int("db_clamped_from");
    t.normalization.ka_raised_from = opt_int("ka_raised_from");
    const json& subsystems = expect_array(j, "subsystems");
    for (std::size_t i = 0; i < subsystems.size(); ++i) {
        std::string at = "subsystems[" + std::to_string(i) + "]";
        if (!subsystems[i].is_array()) bad_field(at, "expected an array");
        t.subsystems.push_back(steps_from(subsystems[i], at));
    }
    t.steps = steps_from(expect_array(j, "steps"), "steps");
    return t;
}

std::string trace_to_json(const BuildTrace& t) {
    json norm{{"swapped", t.normalization.swapped}};
    if (t.normalization.da_clamped_from)
        norm["da_clamped_from"] = *t.normalization.da_clamped_from;
    if (t.normalization.db_clamped_from)
        norm["db_clamped_from"] = *t.normalization.db_clamped_from;
    if (t.normalization.ka_raised_from)
        norm["ka_raised_from"] = *t.normalization.ka_raised_from;
    json j{{"params", params_to(t.params)}, {"normalization", norm}};
    j["subsystems"] = json::array();
    for (const auto& seq : t.subsystems) {
        json steps = json::array();
        for (const auto& s : seq) steps.push_back(step_to(s));
        j["subsystems"].push_back(std::move(steps));
    }
    j["steps"] = json::array();
    for (const auto& s : t.steps) j["steps"].push_back(step_to(s));
    return j.dump(2) + "\n";
}

BuildTrace read_trace(const std::string& path) {
    return trace_from_json(read_file(path));
}

void write_trace(const BuildTrace& t, const std::string& path) {
    write_file(path, trace_to_json(t));
}

std::string dot_string(const CoverGraph& g) {
    std::ostringstream out;
    out << "graph cover {\n";
    for (Side side : {Side::A, Side::B}) {
        for (const auto& c : g.classes) {
            if (c.side != side) continue;
            out << "  subgraph cluster_" << c.id << " {\n"
                << "    label=\"" << side_name(side) << c.id << "\";\n";
            for (int v : g.class_members(c.id)) out << "    v" << v << ";\n";
            out << "  }\n";
        }
    }
    for (const auto& e : g.edges)
        out << "  v" << e.first << " -- v" << e.second << ";\n";
    out << "}\n";
    return out.str();
}

void export_dot(const CoverGraph& g, const std::string& path) {
    require_structure(g);
    write_file(path, dot_string(g));
}

}  // namespace itcover
