// Copyright 2026 The slidekit authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slidekit/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "slidekit/dfa.hpp"
#include "slidekit/encodings.hpp"
#include "slidekit/search.hpp"
#include "slidekit/slid_spec.hpp"
#include "slidekit/slide.hpp"

namespace slidekit {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw std::invalid_argument("instance: " + msg);
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& ctx) {
    if (!obj.is_object())
        bad(ctx + " must be an object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key))
            bad(ctx + ": unknown field \"" + key + "\"");
}

const json& get_field(const json& obj, const char* key, const std::string& ctx) {
    auto it = obj.find(key);
    if (it == obj.end())
        bad(ctx + ": missing field \"" + key + "\"");
    return *it;
}

int get_int(const json& obj, const char* key, const std::string& ctx) {
    const json& v = get_field(obj, key, ctx);
    if (!v.is_number_integer())
        bad(ctx + ": field \"" + key + "\" must be an integer");
    return v.get<int>();
}

std::string get_string(const json& obj, const char* key, const std::string& ctx) {
    const json& v = get_field(obj, key, ctx);
    if (!v.is_string())
        bad(ctx + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

std::vector<int> int_array(const json& v, const std::string& ctx) {
    if (!v.is_array())
        bad(ctx + " must be an array of integers");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer())
            bad(ctx + " must contain only integers");
        out.push_back(e.get<int>());
    }
    return out;
}

std::vector<std::string> name_array(const json& obj, const char* key, const std::string& ctx) {
    const json& v = get_field(obj, key, ctx);
    if (!v.is_array() || v.empty())
        bad(ctx + ": field \"" + key + "\" must be a non-empty array of variable names");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string())
            bad(ctx + ": field \"" + key + "\" must contain variable names");
        out.push_back(e.get<std::string>());
    }
    return out;
}

VarId lookup(const std::map<std::string, VarId>& by_name, const std::string& name,
             const std::string& ctx) {
    auto it = by_name.find(name);
    if (it == by_name.end())
        bad(ctx + ": unknown variable \"" + name + "\"");
    return it->second;
}

std::vector<VarId> lookup_all(const std::map<std::string, VarId>& by_name,
                              const std::vector<std::string>& names, const std::string& ctx) {
    std::vector<VarId> out;
    out.reserve(names.size());
    for (const auto& n : names)
        out.push_back(lookup(by_name, n, ctx));
    return out;
}

SlidSpec parse_spec(const json& j, const std::string& ctx) {
    std::string kind = get_string(j, "kind", ctx);
    if (kind == "table") {
        check_keys(j, {"kind", "arity", "tuples"}, ctx);
        int arity = get_int(j, "arity", ctx);
        const json& tuples = get_field(j, "tuples", ctx);
        if (!tuples.is_array())
            bad(ctx + ": \"tuples\" must be an array");
        std::vector<std::vector<int>> rows;
        for (const auto& row : tuples)
            rows.push_back(int_array(row, ctx + ": tuple"));
        return SlidSpec::table(arity, std::move(rows));
    }
    if (kind == "sum_in_range") {
        check_keys(j, {"kind", "arity", "lower", "upper", "values"}, ctx);
        int arity = get_int(j, "arity", ctx);
        int lower = get_int(j, "lower", ctx);
        int upper = get_int(j, "upper", ctx);
        if (j.contains("values"))
            return SlidSpec::sum_in_range_over(arity, lower, upper,
                                               int_array(j["values"], ctx + ": values"));
        return SlidSpec::sum_in_range(arity, lower, upper);
    }
    bad(ctx + ": unsupported spec kind \"" + kind + "\"");
}

Dfa parse_dfa(const json& j, const std::string& ctx) {
    check_keys(j, {"states", "initial", "accepting", "transitions"}, ctx);
    int states = get_int(j, "states", ctx);
    int initial = get_int(j, "initial", ctx);
    std::vector<int> accepting = int_array(get_field(j, "accepting", ctx), ctx + ": accepting");
    const json& ts = get_field(j, "transitions", ctx);
    if (!ts.is_array())
        bad(ctx + ": \"transitions\" must be an array");
    std::vector<std::array<int, 3>> transitions;
    for (const auto& t : ts) {
        std::vector<int> trip = int_array(t, ctx + ": transition");
        if (trip.size() != 3)
            bad(ctx + ": transitions must be [state, symbol, state] triples");
        transitions.push_back({trip[0], trip[1], trip[2]});
    }
    return Dfa(states, initial, std::move(accepting), std::move(transitions));
}

std::map<int, StretchBounds> parse_lengths(const json& j, const std::string& ctx) {
    if (!j.is_array())
        bad(ctx + ": \"lengths\" must be an array");
    std::map<int, StretchBounds> out;
    for (const auto& e : j) {
        check_keys(e, {"value", "min", "max"}, ctx + ": lengths entry");
        int value = get_int(e, "value", ctx);
        if (out.count(value))
            bad(ctx + ": duplicate stretch bounds for value " + std::to_string(value));
        out[value] = StretchBounds{get_int(e, "min", ctx), get_int(e, "max", ctx)};
    }
    return out;
}

bool parse_baseline(const json& desc, const std::string& ctx) {
    if (!desc.contains("baseline"))
        return false;
    const json& b = desc["baseline"];
    if (!b.is_string() || b.get<std::string>() != "decomposed")
        bad(ctx + ": \"baseline\" must be \"decomposed\"");
    return true;
}

// Validates one constraint object, posts it through its encoding, and
// returns the semantic scope (original variables, count variable last where
// applicable).
std::vector<VarId> post_constraint(Model& m, const json& desc,
                                   const std::map<std::string, VarId>& by_name,
                                   bool force_decomposed, const std::string& ctx) {
    std::string type = get_string(desc, "type", ctx);
    bool decomposed = force_decomposed || parse_baseline(desc, ctx);

    if (type == "slide") {
        check_keys(desc, {"type", "vars", "step", "spec", "baseline"}, ctx);
        auto vars = lookup_all(by_name, name_array(desc, "vars", ctx), ctx);
        SlidSpec spec = parse_spec(get_field(desc, "spec", ctx), ctx + ": spec");
        int step = desc.contains("step") ? get_int(desc, "step", ctx) : 1;
        WindowChain chain = build_chain(vars, spec.arity(), step);
        EncodingResult enc{{}, std::move(chain), std::move(spec), {}};
        post_encoding(m, enc, decomposed);
        return vars;
    }
    if (type == "among") {
        check_keys(desc, {"type", "vars", "values", "count_var", "baseline"}, ctx);
        auto vars = lookup_all(by_name, name_array(desc, "vars", ctx), ctx);
        VarId n_var = lookup(by_name, get_string(desc, "count_var", ctx), ctx);
        auto enc = encode_among(m, vars, int_array(get_field(desc, "values", ctx), ctx), n_var);
        post_encoding(m, enc, decomposed);
        vars.push_back(n_var);
        return vars;
    }
    if (type == "among_seq") {
        check_keys(desc, {"type", "vars", "values", "q", "lower", "upper", "baseline"}, ctx);
        auto vars = lookup_all(by_name, name_array(desc, "vars", ctx), ctx);
        auto enc = encode_among_seq(m, get_int(desc, "lower", ctx), get_int(desc, "upper", ctx),
                                    get_int(desc, "q", ctx), vars,
                                    int_array(get_field(desc, "values", ctx), ctx));
        post_encoding(m, enc, decomposed);
        return vars;
    }
    if (type == "sliding_sum") {
        check_keys(desc, {"type", "vars", "q", "lower", "upper", "baseline"}, ctx);
        auto vars = lookup_all(by_name, name_array(desc, "vars", ctx), ctx);
        auto enc = encode_sliding_sum(m, get_int(desc, "lower", ctx),
                                      get_int(desc, "upper", ctx), get_int(desc, "q", ctx), vars);
        post_encoding(m, enc, decomposed);
        return vars;
    }
    if (type == "regular") {
        check_keys(desc, {"type", "vars", "dfa", "baseline"}, ctx);
        auto vars = lookup_all(by_name, name_array(desc, "vars", ctx), ctx);
        Dfa dfa = parse_dfa(get_field(desc, "dfa", ctx), ctx + ": dfa");
        auto enc = encode_regular(m, dfa, vars);
        post_encoding(m, enc, decomposed);
        return vars;
    }
    if (type == "stretch") {
        check_keys(desc, {"type", "vars", "lengths", "baseline"}, ctx);
        auto vars = lookup_all(by_name, name_array(desc, "vars", ctx), ctx);
        auto enc = encode_stretch(m, vars,
                                  parse_lengths(get_field(desc, "lengths", ctx), ctx));
        post_encoding(m, enc, decomposed);
        return vars;
    }
    if (type == "lex_leq") {
        check_keys(desc, {"type", "xs", "ys", "baseline"}, ctx);
        auto xs = lookup_all(by_name, name_array(desc, "xs", ctx), ctx);
        auto ys = lookup_all(by_name, name_array(desc, "ys", ctx), ctx);
        auto enc = encode_lex_leq(m, xs, ys);
        post_encoding(m, enc, decomposed);
        xs.insert(xs.end(), ys.begin(), ys.end());
        return xs;
    }
    if (type == "contiguity") {
        check_keys(desc, {"type", "vars", "baseline"}, ctx);
        auto vars = lookup_all(by_name, name_array(desc, "vars", ctx), ctx);
        auto enc = encode_contiguity(m, vars);
        post_encoding(m, enc, decomposed);
        return vars;
    }
    if (type == "cardpath") {
        check_keys(desc, {"type", "vars", "count_var", "spec", "baseline"}, ctx);
        auto vars = lookup_all(by_name, name_array(desc, "vars", ctx), ctx);
        VarId n_var = lookup(by_name, get_string(desc, "count_var", ctx), ctx);
        SlidSpec spec = parse_spec(get_field(desc, "spec", ctx), ctx + ": spec");
        auto enc = encode_cardpath(m, spec, vars, n_var);
        post_encoding(m, enc, decomposed);
        vars.push_back(n_var);
        return vars;
    }
    bad(ctx + ": unknown constraint type \"" + type + "\"");
}

// Scope names referenced by a constraint, in semantic order.
std::vector<std::string> scope_names(const json& desc, const std::string& ctx) {
    std::string type = get_string(desc, "type", ctx);
    std::vector<std::string> names;
    if (type == "lex_leq") {
        names = name_array(desc, "xs", ctx);
        auto ys = name_array(desc, "ys", ctx);
        names.insert(names.end(), ys.begin(), ys.end());
        return names;
    }
    names = name_array(desc, "vars", ctx);
    if (type == "among" || type == "cardpath")
        names.push_back(get_string(desc, "count_var", ctx));
    return names;
}

} // namespace

BuiltInstance build_instance(const json& doc, const BuildOptions& opts) {
    check_keys(doc, {"variables", "constraints", "seed", "expected_gac_domains"}, "instance");
    if (doc.contains("seed") && !doc["seed"].is_number_integer())
        bad("\"seed\" must be an integer");

    BuiltInstance out;
    out.model.set_tuple_cap(opts.tuple_cap);
    out.expected_gac = doc.contains("expected_gac_domains") ? doc["expected_gac_domains"]
                                                            : json();

    const json& vars = get_field(doc, "variables", "instance");
    if (!vars.is_array() || vars.empty())
        bad("\"variables\" must be a non-empty array");
    for (const auto& v : vars) {
        check_keys(v, {"name", "lower", "upper"}, "variable");
        std::string name = get_string(v, "name", "variable");
        if (name.empty())
            bad("variable names must be non-empty");
        if (out.by_name.count(name))
            bad("duplicate variable \"" + name + "\"");
        int lower = get_int(v, "lower", "variable " + name);
        int upper = get_int(v, "upper", "variable " + name);
        if (lower > upper)
            bad("variable \"" + name + "\": lower > upper");
        VarId id = out.model.new_variable(lower, upper, name);
        out.by_name[name] = id;
        out.var_names.push_back(name);
    }

    const json& constraints = get_field(doc, "constraints", "instance");
    if (!constraints.is_array())
        bad("\"constraints\" must be an array");
    int idx = 0;
    for (const auto& c : constraints) {
        std::string ctx = "constraint #" + std::to_string(idx);
        std::vector<VarId> scope = post_constraint(out.model, c, out.by_name,
                                                   opts.decompose_all, ctx);
        out.constraints.push_back(ConstraintInfo{c, std::move(scope)});
        ++idx;
    }

    if (!out.expected_gac.is_null()) {
        if (!out.expected_gac.is_object())
            bad("\"expected_gac_domains\" must be an object");
        for (const auto& [name, values] : out.expected_gac.items()) {
            lookup(out.by_name, name, "expected_gac_domains");
            int_array(values, "expected_gac_domains for " + name);
        }
    }
    return out;
}

nlohmann::json parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open instance file: " + path);
    return json::parse(in); // parse_error messages carry line and column
}

BuiltInstance load_instance(const std::string& path, const BuildOptions& opts) {
    return build_instance(parse_instance_file(path), opts);
}

SemanticRelation make_semantics(const json& desc, const std::map<std::string, VarId>& by_name) {
    std::string ctx = "semantics";
    std::string type = get_string(desc, "type", ctx);
    SemanticRelation rel;
    rel.scope = lookup_all(by_name, scope_names(desc, ctx), ctx);

    if (type == "slide") {
        auto spec = std::make_shared<SlidSpec>(parse_spec(desc["spec"], ctx));
        int step = desc.contains("step") ? desc["step"].get<int>() : 1;
        size_t n = name_array(desc, "vars", ctx).size();
        rel.test = [spec, step, n](std::span<const int> t) {
            int k = spec->arity();
            for (size_t off = 0; off + static_cast<size_t>(k) <= n;
                 off += static_cast<size_t>(step))
                if (!spec->evaluate(t.subspan(off, static_cast<size_t>(k))))
                    return false;
            return true;
        };
    } else if (type == "among") {
        auto values = int_array(desc["values"], ctx);
        rel.test = [values](std::span<const int> t) {
            int count = 0;
            for (size_t i = 0; i + 1 < t.size(); ++i)
                count += std::count(values.begin(), values.end(), t[i]) > 0 ? 1 : 0;
            return count == t.back();
        };
    } else if (type == "among_seq") {
        auto values = int_array(desc["values"], ctx);
        int q = desc["q"].get<int>();
        int lower = desc["lower"].get<int>();
        int upper = desc["upper"].get<int>();
        rel.test = [values, q, lower, upper](std::span<const int> t) {
            for (size_t off = 0; off + static_cast<size_t>(q) <= t.size(); ++off) {
                int count = 0;
                for (int i = 0; i < q; ++i)
                    count += std::count(values.begin(), values.end(),
                                        t[off + static_cast<size_t>(i)]) > 0
                                 ? 1
                                 : 0;
                if (count < lower || count > upper)
                    return false;
            }
            return true;
        };
    } else if (type == "sliding_sum") {
        int q = desc["q"].get<int>();
        int lower = desc["lower"].get<int>();
        int upper = desc["upper"].get<int>();
        rel.test = [q, lower, upper](std::span<const int> t) {
            for (size_t off = 0; off + static_cast<size_t>(q) <= t.size(); ++off) {
                long long sum = 0;
                for (int i = 0; i < q; ++i)
                    sum += t[off + static_cast<size_t>(i)];
                if (sum < lower || sum > upper)
                    return false;
            }
            return true;
        };
    } else if (type == "regular") {
        auto dfa = std::make_shared<Dfa>(parse_dfa(desc["dfa"], ctx));
        rel.test = [dfa](std::span<const int> t) { return dfa->accepts(t); };
    } else if (type == "stretch") {
        auto lengths = parse_lengths(desc["lengths"], ctx);
        rel.test = [lengths](std::span<const int> t) {
            size_t i = 0;
            while (i < t.size()) {
                size_t j = i;
                while (j < t.size() && t[j] == t[i])
                    ++j;
                auto it = lengths.find(t[i]);
                if (it != lengths.end()) {
                    int len = static_cast<int>(j - i);
                    if (len < it->second.min || len > it->second.max)
                        return false;
                }
                i = j;
            }
            return true;
        };
    } else if (type == "lex_leq") {
        size_t n = name_array(desc, "xs", ctx).size();
        rel.test = [n](std::span<const int> t) {
            for (size_t i = 0; i < n; ++i) {
                if (t[i] < t[n + i])
                    return true;
                if (t[i] > t[n + i])
                    return false;
            }
            return true;
        };
    } else if (type == "contiguity") {
        rel.test = [](std::span<const int> t) {
            int blocks = 0;
            bool in_block = false;
            for (int v : t) {
                if (v == 1 && !in_block) {
                    ++blocks;
                    in_block = true;
                } else if (v == 0) {
                    in_block = false;
                }
            }
            return blocks <= 1;
        };
    } else if (type == "cardpath") {
        auto spec = std::make_shared<SlidSpec>(parse_spec(desc["spec"], ctx));
        rel.test = [spec](std::span<const int> t) {
            int k = spec->arity();
            size_t n = t.size() - 1;
            int count = 0;
            for (size_t off = 0; off + static_cast<size_t>(k) <= n; ++off)
                count += spec->evaluate(t.subspan(off, static_cast<size_t>(k))) ? 1 : 0;
            return count == t.back();
        };
    } else {
        bad(ctx + ": unknown constraint type \"" + type + "\"");
    }
    return rel;
}

namespace {

std::string domain_to_string(const std::vector<int>& values) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << values[i];
    out << "}";
    return out.str();
}

// Sub-instance containing only the variables one constraint refers to, at
// their original bounds, with the chained (non-decomposed) encoding.
json isolate_constraint(const json& doc, const json& desc) {
    std::vector<std::string> names = scope_names(desc, "verify");
    std::set<std::string> wanted(names.begin(), names.end());
    json vars = json::array();
    for (const auto& v : doc["variables"])
        if (wanted.count(v["name"].get<std::string>()))
            vars.push_back(v);
    json stripped = desc;
    stripped.erase("baseline");
    return json{{"variables", vars}, {"constraints", json::array({stripped})}};
}

} // namespace

VerifyResult verify_instance(const json& doc, long long oracle_cap) {
    VerifyResult res;

    BuiltInstance full = build_instance(doc);
    bool root_ok = full.model.fixpoint();

    if (!full.expected_gac.is_null()) {
        bool fixture_ok = true;
        for (const auto& [name, values] : full.expected_gac.items()) {
            VarId v = full.by_name.at(name);
            std::vector<int> expected = values.get<std::vector<int>>();
            std::sort(expected.begin(), expected.end());
            std::vector<int> actual =
                root_ok ? full.model.domain(v).sorted_values() : std::vector<int>{};
            if (expected != actual) {
                fixture_ok = false;
                res.ok = false;
                res.messages.push_back("fixture MISMATCH for " + name + ": expected " +
                                       domain_to_string(expected) + ", propagation gives " +
                                       domain_to_string(actual));
            }
        }
        if (fixture_ok)
            res.messages.push_back("fixture: domains match");
    }

    for (size_t ci = 0; ci < full.constraints.size(); ++ci) {
        const json& desc = full.constraints[ci].desc;
        std::string label =
            "constraint #" + std::to_string(ci) + " (" + desc["type"].get<std::string>() + ")";
        json subdoc = isolate_constraint(doc, desc);

        BuiltInstance propagated = build_instance(subdoc);
        bool ok = propagated.model.fixpoint();

        BuiltInstance pristine = build_instance(subdoc);
        auto oracle_domains = gac_by_definition(pristine.model, oracle_cap);

        bool gac_ok = true;
        for (VarId v = 0; v < pristine.model.num_variables(); ++v) {
            std::vector<int> actual =
                ok ? propagated.model.domain(v).sorted_values() : std::vector<int>{};
            if (actual != oracle_domains[static_cast<size_t>(v)]) {
                gac_ok = false;
                res.ok = false;
                res.messages.push_back(label + ": GAC MISMATCH on " + pristine.model.name(v) +
                                       ": propagator " + domain_to_string(actual) + ", oracle " +
                                       domain_to_string(oracle_domains[static_cast<size_t>(v)]));
            }
        }
        if (gac_ok)
            res.messages.push_back(label + ": propagation matches GAC by definition");

        auto solutions = enumerate_solutions(pristine.model, oracle_cap);
        SemanticRelation rel = make_semantics(desc, pristine.by_name);
        auto projected = project(solutions, rel.scope);
        auto direct = enumerate_relation(pristine.model, rel, oracle_cap);
        if (projected == direct) {
            res.messages.push_back(label + ": encoding projection matches direct semantics");
        } else {
            res.ok = false;
            res.messages.push_back(label + ": PROJECTION MISMATCH (" +
                                   std::to_string(projected.size()) + " encoded vs " +
                                   std::to_string(direct.size()) + " direct tuples)");
        }
    }
    return res;
}

} // namespace slidekit
