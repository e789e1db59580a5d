#include "genfactor/egcc.hpp"

#include <set>
#include <stdexcept>

#include "genfactor/fpt_solver.hpp"
#include "json.hpp"

namespace genfactor {

namespace {

using nlohmann::json;

json parse_json_rejecting_duplicates(std::string_view text) {
    std::vector<std::set<std::string>> key_stack;
    auto cb = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
        if (event == json::parse_event_t::object_start) {
            key_stack.emplace_back();
        } else if (event == json::parse_event_t::object_end) {
            key_stack.pop_back();
        } else if (event == json::parse_event_t::key) {
            const auto key = parsed.get<std::string>();
            if (!key_stack.back().insert(key).second)
                throw std::runtime_error("duplicate key \"" + key + "\"");
        }
        return true;
    };
    try {
        return json::parse(text, cb);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("model file is not well-formed: ") + e.what());
    }
}

}  // namespace

EgccModel parse_egcc(std::string_view text) {
    const json root = parse_json_rejecting_duplicates(text);
    if (!root.is_object()) throw std::runtime_error("model file must contain an object");
    for (const auto& [key, value] : root.items())
        if (key != "variables" && key != "cards")
            throw std::runtime_error("unexpected top-level key \"" + key + "\"");
    if (!root.contains("variables")) throw std::runtime_error("missing \"variables\" map");
    if (!root.contains("cards")) throw std::runtime_error("missing \"cards\" map");
    const json& vars = root.at("variables");
    const json& cards = root.at("cards");
    if (!vars.is_object()) throw std::runtime_error("\"variables\" must map names to domains");
    if (!cards.is_object()) throw std::runtime_error("\"cards\" must map values to count lists");

    EgccModel model;
    for (const auto& [name, domain] : vars.items()) {
        if (!domain.is_array() || domain.empty())
            throw std::runtime_error("domain of \"" + name + "\" must be a non-empty array");
        std::vector<std::string> values;
        std::set<std::string> seen;
        for (const json& v : domain) {
            if (!v.is_string())
                throw std::runtime_error("domain of \"" + name + "\" must contain strings");
            const auto s = v.get<std::string>();
            if (!seen.insert(s).second)
                throw std::runtime_error("domain of \"" + name + "\" repeats \"" + s + "\"");
            values.push_back(s);
        }
        model.variables[name] = std::move(values);
    }
    for (const auto& [name, list] : cards.items()) {
        if (!list.is_array())
            throw std::runtime_error("count list of \"" + name + "\" must be an array");
        DegreeList counts;
        for (const json& c : list) {
            if (!c.is_number_integer() || c.get<long long>() < 0)
                throw std::runtime_error("count list of \"" + name +
                                         "\" must contain non-negative integers");
            counts.push_back(c.get<int>());
        }
        model.cards[name] = canonical_list(std::move(counts));
    }
    for (const auto& [name, domain] : model.variables) {
        if (model.cards.count(name))
            throw std::runtime_error("\"" + name + "\" is used both as a variable and as a value");
        for (const auto& v : domain)
            if (model.variables.count(v))
                throw std::runtime_error("\"" + v + "\" is used both as a variable and as a value");
    }
    return model;
}

ValueGraph build_value_graph(const EgccModel& model) {
    const int num_vars = static_cast<int>(model.variables.size());

    std::set<std::string> value_set;
    for (const auto& [name, domain] : model.variables)
        for (const auto& v : domain) value_set.insert(v);
    for (const auto& [name, counts] : model.cards) value_set.insert(name);

    ValueGraph graph;
    for (const auto& [name, domain] : model.variables) graph.variable_names.push_back(name);
    graph.value_names.assign(value_set.begin(), value_set.end());

    std::map<std::string, int> value_index;
    for (size_t j = 0; j < graph.value_names.size(); ++j)
        value_index[graph.value_names[j]] = static_cast<int>(j) + 1;

    std::vector<std::pair<int, int>> edges;
    int ui = 0;
    for (const auto& [name, domain] : model.variables) {
        ++ui;
        for (const auto& v : domain) edges.push_back({ui, value_index.at(v)});
    }

    std::vector<DegreeList> u_lists(static_cast<size_t>(num_vars), DegreeList{1});
    std::vector<DegreeList> v_lists;
    DegreeList unconstrained(static_cast<size_t>(num_vars) + 1);
    for (int c = 0; c <= num_vars; ++c) unconstrained[static_cast<size_t>(c)] = c;
    for (const auto& value : graph.value_names) {
        auto it = model.cards.find(value);
        v_lists.push_back(it != model.cards.end() ? it->second : unconstrained);
    }

    graph.instance = lift_unweighted(num_vars, static_cast<int>(graph.value_names.size()), edges,
                                     std::move(u_lists), std::move(v_lists));
    return graph;
}

Assignment factor_to_assignment(const ValueGraph& graph, std::span<const Weight> phi) {
    const VerifyResult check = verify_factor(graph.instance, phi);
    if (!check.ok)
        throw std::invalid_argument("weighting is not a factor of the value graph: " +
                                    describe(graph.instance, *check.violation));
    Assignment out;
    for (int i = 1; i <= graph.instance.num_u(); ++i) {
        int chosen = 0;
        for (int id : graph.instance.incident_edges(u_vertex(i)))
            if (phi[static_cast<size_t>(id)] > 0) chosen = graph.instance.edge(id).v;
        if (chosen == 0)
            throw std::invalid_argument("variable \"" + graph.variable_names[static_cast<size_t>(i - 1)] +
                                        "\" has weighted degree != 1");
        out[graph.variable_names[static_cast<size_t>(i - 1)]] =
            graph.value_names[static_cast<size_t>(chosen - 1)];
    }
    return out;
}

bool assignment_satisfies(const EgccModel& model, const Assignment& assignment) {
    const int num_vars = static_cast<int>(model.variables.size());
    std::map<std::string, int> counts;
    for (const auto& [name, domain] : model.variables) {
        const auto it = assignment.find(name);
        if (it == assignment.end()) return false;
        bool in_domain = false;
        for (const auto& v : domain)
            if (v == it->second) in_domain = true;
        if (!in_domain) return false;
        ++counts[it->second];
    }
    if (assignment.size() != model.variables.size()) return false;

    std::set<std::string> all_values;
    for (const auto& [name, domain] : model.variables)
        for (const auto& v : domain) all_values.insert(v);
    for (const auto& [name, list] : model.cards) all_values.insert(name);
    for (const auto& value : all_values) {
        const int count = counts.count(value) ? counts.at(value) : 0;
        const auto it = model.cards.find(value);
        if (it != model.cards.end()) {
            if (!list_contains(it->second, count)) return false;
        } else {
            if (count < 0 || count > num_vars) return false;  // always true; kept for symmetry
        }
    }
    return true;
}

std::optional<Assignment> check_consistency(const EgccModel& model, int threads) {
    const ValueGraph graph = build_value_graph(model);
    SolveOptions options;
    options.fast_path = FastPathMode::automatic;  // value graphs are all-{1} on the U side
    options.threads = threads;
    const SolveResult result = solve_instance(graph.instance, options);
    if (!result.decision.yes()) return std::nullopt;
    return factor_to_assignment(graph, *result.decision.witness);
}

}  // namespace genfactor
