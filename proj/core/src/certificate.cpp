#include "extremal/certificate.hpp"

#include <algorithm>

#include <json.hpp>

namespace extremal {

namespace {

using nlohmann::json;

void need(bool cond, const char* what) {
    if (!cond) fail(Errc::InvalidInput, std::string("malformed certificate: ") + what);
}

TreeJoinSpec tree_spec_from(const Certificate& c, const std::vector<Digraph>& parts,
                            const std::vector<bool>& is_b) {
    TreeJoinSpec spec;
    spec.tree = c.tree;
    spec.edges = c.tree_edges;
    spec.peripheral = c.peripheral;
    need(c.piece_uv.size() == c.tree_edges.size(), "one junction pair per edge");
    std::size_t next_part = 0;
    for (std::size_t i = 0; i < c.tree_edges.size(); ++i) {
        TreePiece piece;
        if (is_b.empty() || !is_b[i]) {
            need(next_part < parts.size(), "missing tree join piece");
            piece.d = parts[next_part++];
            piece.u = c.piece_uv[i].first;
            piece.v = c.piece_uv[i].second;
        }
        spec.pieces.push_back(std::move(piece));
    }
    need(next_part == parts.size(), "extra tree join piece");
    return spec;
}

Digraph replay_node(const Certificate& c) {
    std::vector<Digraph> parts;
    parts.reserve(c.children.size());
    for (const auto& child : c.children) parts.push_back(replay(child));

    switch (c.kind) {
    case Certificate::Kind::BaseComplete: return base(BaseKind::Complete, c.param);
    case Certificate::Kind::BaseOddWheel: return base(BaseKind::OddWheel, c.param);
    case Certificate::Kind::BaseDirectedCycle: return base(BaseKind::DirectedCycle, c.param);
    case Certificate::Kind::BaseSymmetricOddCycle:
        return base(BaseKind::SymmetricOddCycle, c.param);
    case Certificate::Kind::DirectedJoin:
        need(parts.size() == 2 && c.args.size() == 4, "directed join arity");
        return directed_hajos_join(parts[0], c.args[0], c.args[1], parts[1], c.args[2], c.args[3]).d;
    case Certificate::Kind::BidirectedJoin:
        need(parts.size() == 2 && c.args.size() == 4, "bidirected join arity");
        return bidirected_hajos_join(parts[0], c.args[0], c.args[1], parts[1], c.args[2],
                                     c.args[3]).d;
    case Certificate::Kind::Bijoin:
        need(parts.size() == 2 && c.args.size() == 6, "bijoin arity");
        return hajos_bijoin(parts[0], c.args[0], c.args[1], c.args[2], parts[1], c.args[3],
                            c.args[4], c.args[5]).d;
    case Certificate::Kind::ParallelJoin:
        need(parts.size() == 2 && c.args.size() == 7, "parallel join arity");
        return parallel_hajos_join(parts[0], c.args[0], c.args[1], c.args[2], c.args[3], c.args[4],
                                   parts[1], c.args[5], c.args[6]).d;
    case Certificate::Kind::StarJoin: {
        const int l = static_cast<int>(parts.size());
        need(l >= 2 && c.piece_uv.size() == parts.size(), "star join arity");
        Certificate star = c;
        star.tree.n = l + 1;
        star.tree.rotation.assign(l + 1, {});
        for (int i = 1; i <= l; ++i) {
            star.tree.rotation[0].push_back(i);
            star.tree.rotation[i].push_back(0);
        }
        star.tree_edges.clear();
        star.peripheral.clear();
        for (int i = 1; i <= l; ++i) {
            star.tree_edges.emplace_back(0, i);
            star.peripheral.push_back(i);
        }
        return hajos_tree_join(tree_spec_from(star, parts, {})).d;
    }
    case Certificate::Kind::TreeJoin:
        return hajos_tree_join(tree_spec_from(c, parts, {})).d;
    case Certificate::Kind::ExtendedTreeJoin:
        return extended_hajos_tree_join(tree_spec_from(c, parts, {})).d;
    case Certificate::Kind::TwoTreeJoin: {
        std::vector<bool> is_b(c.tree_edges.size(), false);
        for (int e : c.b_edges) {
            need(e >= 0 && e < static_cast<int>(is_b.size()), "digon edge index range");
            is_b[e] = true;
        }
        return two_hajos_tree_join(tree_spec_from(c, parts, is_b), is_b).d;
    }
    }
    fail(Errc::InvalidInput, "unknown certificate kind");
}

const char* kind_name(Certificate::Kind kind) {
    switch (kind) {
    case Certificate::Kind::BaseComplete: return "complete";
    case Certificate::Kind::BaseOddWheel: return "odd_wheel";
    case Certificate::Kind::BaseDirectedCycle: return "directed_cycle";
    case Certificate::Kind::BaseSymmetricOddCycle: return "symmetric_odd_cycle";
    case Certificate::Kind::DirectedJoin: return "directed_join";
    case Certificate::Kind::BidirectedJoin: return "bidirected_join";
    case Certificate::Kind::Bijoin: return "bijoin";
    case Certificate::Kind::ParallelJoin: return "parallel_join";
    case Certificate::Kind::StarJoin: return "star_join";
    case Certificate::Kind::TreeJoin: return "tree_join";
    case Certificate::Kind::ExtendedTreeJoin: return "extended_tree_join";
    case Certificate::Kind::TwoTreeJoin: return "two_tree_join";
    }
    return "?";
}

Certificate::Kind kind_from_name(const std::string& name) {
    for (auto kind :
         {Certificate::Kind::BaseComplete, Certificate::Kind::BaseOddWheel,
          Certificate::Kind::BaseDirectedCycle, Certificate::Kind::BaseSymmetricOddCycle,
          Certificate::Kind::DirectedJoin, Certificate::Kind::BidirectedJoin,
          Certificate::Kind::Bijoin, Certificate::Kind::ParallelJoin, Certificate::Kind::StarJoin,
          Certificate::Kind::TreeJoin, Certificate::Kind::ExtendedTreeJoin,
          Certificate::Kind::TwoTreeJoin})
        if (name == kind_name(kind)) return kind;
    fail(Errc::ParseError, "unknown certificate kind '" + name + "'");
}

bool is_base(Certificate::Kind kind) {
    return kind == Certificate::Kind::BaseComplete || kind == Certificate::Kind::BaseOddWheel ||
           kind == Certificate::Kind::BaseDirectedCycle ||
           kind == Certificate::Kind::BaseSymmetricOddCycle;
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (auto [a, b] : pairs) out.push_back(json::array({a, b}));
    return out;
}

std::vector<std::pair<int, int>> pairs_from_json(const json& j) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) fail(Errc::ParseError, "expected a pair");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

json to_json(const Certificate& c) {
    json j;
    j["kind"] = kind_name(c.kind);
    if (is_base(c.kind)) j["param"] = c.param;
    if (!c.children.empty()) {
        json kids = json::array();
        for (const auto& child : c.children) kids.push_back(to_json(child));
        j["children"] = std::move(kids);
    }
    if (!c.args.empty()) j["args"] = c.args;
    if (c.tree.n > 0) j["tree"] = {{"n", c.tree.n}, {"rotation", c.tree.rotation}};
    if (!c.tree_edges.empty()) j["edges"] = pairs_to_json(c.tree_edges);
    if (!c.piece_uv.empty()) j["piece_uv"] = pairs_to_json(c.piece_uv);
    if (!c.peripheral.empty()) j["peripheral"] = c.peripheral;
    if (!c.b_edges.empty()) j["b_edges"] = c.b_edges;
    if (!c.relabel.empty()) j["relabel"] = c.relabel;
    return j;
}

Certificate from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail(Errc::ParseError, "certificate node needs a kind");
    Certificate c;
    c.kind = kind_from_name(j["kind"].get<std::string>());
    if (j.contains("param")) c.param = j["param"].get<int>();
    if (j.contains("children"))
        for (const auto& child : j["children"]) c.children.push_back(from_json(child));
    if (j.contains("args")) c.args = j["args"].get<std::vector<int>>();
    if (j.contains("tree")) {
        c.tree.n = j["tree"]["n"].get<int>();
        c.tree.rotation = j["tree"]["rotation"].get<std::vector<std::vector<int>>>();
    }
    if (j.contains("edges")) c.tree_edges = pairs_from_json(j["edges"]);
    if (j.contains("piece_uv")) c.piece_uv = pairs_from_json(j["piece_uv"]);
    if (j.contains("peripheral")) c.peripheral = j["peripheral"].get<std::vector<int>>();
    if (j.contains("b_edges")) c.b_edges = j["b_edges"].get<std::vector<int>>();
    if (j.contains("relabel")) c.relabel = j["relabel"].get<std::vector<int>>();
    return c;
}

} // namespace

Digraph replay(const Certificate& c) {
    Digraph g = replay_node(c);
    if (c.relabel.empty()) return g;
    need(static_cast<int>(c.relabel.size()) == g.order(), "relabel size");
    std::vector<int> check = c.relabel;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < g.order(); ++i) need(check[i] == i, "relabel is not a permutation");
    std::vector<Arc> arcs;
    for (auto [u, v] : g.arcs()) arcs.emplace_back(c.relabel[u], c.relabel[v]);
    return Digraph::build(g.order(), std::move(arcs));
}

bool certifies(const Certificate& c, const Digraph& d) {
    try {
        return replay(c) == d;
    } catch (const Error&) {
        return false;
    }
}

std::string certificate_to_json(const Certificate& c, bool pretty) {
    return to_json(c).dump(pretty ? 2 : -1);
}

Certificate certificate_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::ParseError, "invalid JSON");
    try {
        return from_json(j);
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("bad certificate JSON: ") + e.what());
    }
}

} // namespace extremal
