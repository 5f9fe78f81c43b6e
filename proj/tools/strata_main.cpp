// Command-line front end: every subcommand reads its inputs, runs one
// library operation per input, and emits one JSON report line per input.
// Exit codes: 0 clean run (negative verdicts included), 1 operation
// error or theorem violation, 2 usage error, 3 malformed input file,
// 4 feasibility cap exceeded.

#include <atomic>
#include <functional>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "strata/cat/core.hpp"
#include "strata/cat/limits.hpp"
#include "strata/cat/rel.hpp"
#include "strata/cat/setcat.hpp"
#include "strata/model.hpp"
#include "strata/parse.hpp"
#include "strata/print.hpp"
#include "strata/stratify.hpp"
#include "strata/transform.hpp"

using nlohmann::json;
using namespace strata;

namespace {

struct Options {
    std::string dialect = "plain";
    bool pretty = false;
    int jobs = 1;
    unsigned long long seed = 0;
};

Dialect parse_dialect(const std::string& d) {
    if (d == "plain") return Dialect::Plain;
    if (d == "tst") return Dialect::Tst;
    if (d == "lstar") return Dialect::Lstar;
    throw CLI::ValidationError("--dialect must be plain, tst or lstar");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One report line per input; doubles as the exit-code aggregator.
struct Reporter {
    const Options& opts;
    int exit_code = 0;

    // Runs items in input order; with --jobs > 1 the work is parallel
    // but the output order still follows the input order.
    template <typename Fn>
    void run_all(size_t count, Fn&& fn) {
        std::vector<json> results(count);
        std::vector<double> times(count);
        std::vector<int> codes(count, 0);
        auto work = [&](size_t i) {
            auto t0 = std::chrono::steady_clock::now();
            try {
                results[i] = fn(i);
            } catch (const ParseError& e) {
                results[i] = {{"error", e.what()}};
                codes[i] = 3;
            } catch (const DialectError& e) {
                results[i] = {{"error", e.what()}};
                codes[i] = 3;
            } catch (const json::exception& e) {
                results[i] = {{"error", e.what()}};
                codes[i] = 3;
            } catch (const CapError& e) {
                results[i] = {{"error", e.what()}};
                codes[i] = 4;
            } catch (const cat::FeasibilityError& e) {
                results[i] = {{"error", e.what()}};
                codes[i] = 4;
            } catch (const cat::CarrierOverflow& e) {
                results[i] = {{"error", e.what()}};
                codes[i] = 4;
            } catch (const std::exception& e) {
                results[i] = {{"error", e.what()}};
                codes[i] = 1;
            }
            auto t1 = std::chrono::steady_clock::now();
            times[i] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        };
        if (opts.jobs <= 1) {
            for (size_t i = 0; i < count; ++i) work(i);
        } else {
            std::vector<std::thread> pool;
            std::atomic<size_t> next{0};
            for (int t = 0; t < opts.jobs; ++t)
                pool.emplace_back([&] {
                    for (size_t i = next++; i < count; i = next++) work(i);
                });
            for (auto& t : pool) t.join();
        }
        for (size_t i = 0; i < count; ++i) {
            results[i]["elapsed_ms"] = times[i];
            std::cout << (opts.pretty ? results[i].dump(2) : results[i].dump()) << "\n";
            exit_code = std::max(exit_code, codes[i]);
        }
    }
};

json verdict_json(const ConstraintGraph& g, const StratifyVerdict& v) {
    json j;
    if (v.stratified) {
        j["verdict"] = "stratified";
        json asg = json::object();
        for (const auto& [label, type] : v.assignment.by_label(g)) asg[label] = type;
        j["assignment"] = asg;
    } else {
        j["verdict"] = "unstratified";
        json cycle = json::array();
        for (const auto& step : v.cycle)
            cycle.push_back({{"from", g.node_labels[step.from]},
                             {"to", g.node_labels[step.to]},
                             {"offset", step.offset}});
        j["cycle"] = cycle;
    }
    return j;
}

json mask_tokens(const cat::RelUniverse& u, cat::Mask m) {
    json out = json::array();
    for (int i = 0; i < u.size(); ++i)
        if ((m >> i) & 1) out.push_back(u.tokens[i]);
    return out;
}

json rel_pairs(const cat::RelUniverse& u, const cat::Rel& r) {
    json out = json::array();
    for (int a = 0; a < u.size(); ++a)
        for (int b = 0; b < u.size(); ++b)
            if ((r.adj[a] >> b) & 1) out.push_back({u.tokens[a], u.tokens[b]});
    return out;
}

struct RelDiagramFile {
    cat::RelUniverse universe;
    std::vector<std::pair<int, cat::Mask>> diagram;
};

RelDiagramFile load_rel_diagram(const std::string& path) {
    json j = json::parse(slurp(path));
    std::vector<std::string> base = j.at("universe").get<std::vector<std::string>>();
    std::vector<int> tags;
    std::vector<std::pair<int, std::vector<std::string>>> entries;
    for (const auto& d : j.at("diagram")) {
        tags.push_back(d.at("tag").get<int>());
        entries.emplace_back(tags.back(), d.at("set").get<std::vector<std::string>>());
    }
    RelDiagramFile out{cat::RelUniverse::close_over(base, tags), {}};
    for (const auto& [tag, names] : entries) {
        cat::Mask m = 0;
        for (const auto& n : names) {
            int idx = -1;
            for (int i = 0; i < out.universe.base; ++i)
                if (out.universe.tokens[i] == n) { idx = i; break; }
            if (idx < 0)
                throw std::invalid_argument("diagram element '" + n + "' is not in the universe");
            m |= cat::Mask(1) << idx;
        }
        out.diagram.emplace_back(tag, m);
    }
    return out;
}

cat::FinCategory load_category(const std::string& path) {
    return cat::FinCategory::from_json(slurp(path));
}

// {"source": file, "target": file, "objects": {..}, "morphisms": {..}}
struct FunctorFile {
    cat::FinCategory src, dst;
    cat::Functor functor;
};

std::unique_ptr<FunctorFile> load_functor(const std::string& path) {
    json j = json::parse(slurp(path));
    auto out = std::make_unique<FunctorFile>();
    out->src = load_category(j.at("source").get<std::string>());
    out->dst = load_category(j.at("target").get<std::string>());
    out->functor.src = &out->src;
    out->functor.dst = &out->dst;
    out->functor.obj_map.assign(out->src.num_objects(), -1);
    out->functor.mor_map.assign(out->src.num_morphisms(), -1);
    for (auto it = j.at("objects").begin(); it != j.at("objects").end(); ++it) {
        int s = out->src.object_index(it.key());
        int d = out->dst.object_index(it.value().get<std::string>());
        if (s < 0 || d < 0) throw std::invalid_argument("functor object entry names an unknown object");
        out->functor.obj_map[s] = d;
    }
    for (auto it = j.at("morphisms").begin(); it != j.at("morphisms").end(); ++it) {
        int s = out->src.morphism_index(it.key());
        int d = out->dst.morphism_index(it.value().get<std::string>());
        if (s < 0 || d < 0)
            throw std::invalid_argument("functor morphism entry names an unknown morphism");
        out->functor.mor_map[s] = d;
    }
    for (int i = 0; i < out->src.num_objects(); ++i)
        if (out->functor.obj_map[i] < 0)
            throw std::invalid_argument("functor object map misses '" + out->src.objects[i] + "'");
    for (int i = 0; i < out->src.num_morphisms(); ++i)
        if (out->functor.mor_map[i] < 0)
            throw std::invalid_argument("functor morphism map misses '" + out->src.morphisms[i].id + "'");
    return out;
}

// {"category": file, "objects": {"A": ["e", ..]}, "morphisms": {"f": {"e": "e2"}}}
struct SetFunctorFile {
    cat::FinCategory c;
    cat::SetFunctor functor;
};

std::unique_ptr<SetFunctorFile> load_set_functor(const std::string& path) {
    json j = json::parse(slurp(path));
    auto out = std::make_unique<SetFunctorFile>();
    out->c = load_category(j.at("category").get<std::string>());
    auto& f = out->functor;
    f.c = &out->c;
    f.size.assign(out->c.num_objects(), 0);
    f.labels.assign(out->c.num_objects(), {});
    f.map.assign(out->c.num_morphisms(), {});
    for (auto it = j.at("objects").begin(); it != j.at("objects").end(); ++it) {
        int obj = out->c.object_index(it.key());
        if (obj < 0) throw std::invalid_argument("unknown object '" + it.key() + "'");
        f.labels[obj] = it.value().get<std::vector<std::string>>();
        f.size[obj] = static_cast<int>(f.labels[obj].size());
    }
    auto element_index = [&](int obj, const std::string& name) {
        for (size_t i = 0; i < f.labels[obj].size(); ++i)
            if (f.labels[obj][i] == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown element '" + name + "'");
    };
    for (auto it = j.at("morphisms").begin(); it != j.at("morphisms").end(); ++it) {
        int m = out->c.morphism_index(it.key());
        if (m < 0) throw std::invalid_argument("unknown morphism '" + it.key() + "'");
        int dom = out->c.morphisms[m].dom, cod = out->c.morphisms[m].cod;
        f.map[m].assign(f.size[dom], -1);
        for (auto e = it.value().begin(); e != it.value().end(); ++e)
            f.map[m][element_index(dom, e.key())] = element_index(cod, e.value().get<std::string>());
        for (int x : f.map[m])
            if (x < 0) throw std::invalid_argument("morphism table for '" + it.key() + "' is partial");
    }
    for (int i = 0; i < out->c.num_objects(); ++i) {
        int id = out->c.identity[i];
        if (f.map[id].empty()) {
            f.map[id].resize(f.size[i]);
            for (int x = 0; x < f.size[i]; ++x) f.map[id][x] = x;
        }
    }
    auto violations = cat::validate_set_functor(f);
    if (!violations.empty()) throw std::invalid_argument("not a functor: " + violations[0].detail);
    return out;
}

Valuation parse_assignment(const std::string& text) {
    Valuation v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--assign wants name=element pairs");
        v[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratified set theory and finite category toolkit"};
    app.require_subcommand(1);
    Options opts;
    app.add_option("--dialect", opts.dialect, "formula dialect: plain, tst or lstar")
        ->capture_default_str();
    app.add_flag("--pretty", opts.pretty, "indent JSON reports");
    app.add_option("--jobs", opts.jobs, "worker threads for batch inputs")->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for randomized corpus generation")->capture_default_str();

    std::string file, model_file, out_file, assign_text, element, object_id;
    bool multi = false, oracle = false, merge_set_vars = false;
    int vn = 0, raise_k = 1, max_morphisms = 5, random_count = 0, random_vars = 4, random_atoms = 5;
    std::string restrictor = "S", class_var = "X", var_x = "x", var_y = "y";

    auto* parse_cmd = app.add_subcommand("parse", "parse formulas and print them back");
    parse_cmd->add_option("file", file)->required();
    parse_cmd->add_flag("--multi", multi, "';'-separated blocks instead of one formula per line");

    auto* strat = app.add_subcommand("stratify", "decide stratifiability per formula");
    strat->add_option("file", file);
    strat->add_flag("--multi", multi);
    strat->add_flag("--oracle", oracle, "also run the exhaustive assignment search");
    strat->add_flag("--merge-set-vars", merge_set_vars, "merge lstar set-variable occurrences");
    strat->add_option("--random", random_count, "check N random formulas instead of a file");
    strat->add_option("--random-vars", random_vars)->capture_default_str();
    strat->add_option("--random-atoms", random_atoms)->capture_default_str();

    auto* transform = app.add_subcommand("transform", "syntactic transformations and schema instances");
    transform->require_subcommand(1);
    auto add_formula_verb = [&](const char* name, const char* desc) {
        auto* cmd = transform->add_subcommand(name, desc);
        cmd->add_option("file", file)->required();
        cmd->add_flag("--multi", multi);
        return cmd;
    };
    auto* t_rel = add_formula_verb("relativize", "restrict every quantifier to the restrictor");
    t_rel->add_option("--restrictor", restrictor)->capture_default_str();
    auto* t_refl = add_formula_verb("reflect", "reflection schema instance for each formula");
    t_refl->add_option("--restrictor", restrictor)->capture_default_str();
    auto* t_comp = add_formula_verb("comprehend", "comprehension instance for each stratified payload");
    t_comp->add_option("--var", class_var)->capture_default_str();
    auto* t_repl = add_formula_verb("replace", "replacement schema instance");
    t_repl->add_option("--var-x", var_x)->capture_default_str();
    t_repl->add_option("--var-y", var_y)->capture_default_str();
    auto* t_found = add_formula_verb("found", "foundation schema instance");
    t_found->add_option("--var-x", var_x)->capture_default_str();
    auto* t_raise = add_formula_verb("raise", "raise tst type indices");
    t_raise->add_option("-k,--by", raise_k)->capture_default_str();
    auto* t_erase = add_formula_verb("erase", "drop tst type indices");
    auto* t_super = transform->add_subcommand("supertransitivity", "the two smallness axioms");
    t_super->add_option("--restrictor", restrictor)->capture_default_str();

    auto* model = app.add_subcommand("model", "finite membership structures");
    model->require_subcommand(1);
    auto* m_build = model->add_subcommand("build-vn", "materialize a hereditarily finite stage");
    m_build->add_option("--n", vn)->required();
    m_build->add_option("--out", out_file, "write the JSON here instead of inlining it");
    auto* m_eval = model->add_subcommand("eval", "evaluate formulas over a structure");
    m_eval->add_option("file", file)->required();
    m_eval->add_flag("--multi", multi);
    m_eval->add_option("--model", model_file, "structure JSON (default: build-vn of --n)");
    m_eval->add_option("--n", vn)->capture_default_str();
    m_eval->add_option("--assign", assign_text, "valuation, e.g. x=0,y=3");
    auto* m_refl = model->add_subcommand("reflect-search", "least reflecting stage");
    m_refl->add_option("file", file)->required();
    m_refl->add_flag("--multi", multi);
    m_refl->add_option("--n", vn)->required();
    auto* m_cantor = model->add_subcommand("cantor", "singleton image vs powerset counts");
    m_cantor->add_option("--n", vn)->required();
    m_cantor->add_option("--element", element, "one element id (default: all)");

    auto* cat_cmd = app.add_subcommand("cat", "finite category engine");
    cat_cmd->require_subcommand(1);
    auto* c_validate = cat_cmd->add_subcommand("validate", "check the category laws");
    c_validate->add_option("file", file)->required();
    auto* c_limits = cat_cmd->add_subcommand("limits", "cones and limits of a diagram");
    c_limits->add_option("file", file)->required();
    auto* c_freyd = cat_cmd->add_subcommand("freyd", "Arr-indexed product search");
    c_freyd->add_option("file", file)->required();
    c_freyd->add_option("--max-morphisms", max_morphisms)->capture_default_str();
    auto* c_rp = cat_cmd->add_subcommand("rel-product", "tagged product in the relation category");
    c_rp->add_option("file", file)->required();
    auto* c_rc = cat_cmd->add_subcommand("rel-coproduct", "daggered coproduct in the relation category");
    c_rc->add_option("file", file)->required();
    auto* c_sc = cat_cmd->add_subcommand("set-coproduct", "disjoint union with functional injections");
    c_sc->add_option("file", file)->required();
    auto* c_yon = cat_cmd->add_subcommand("yoneda", "hom-set to natural-transformation bijection");
    c_yon->add_option("file", file)->required();
    c_yon->add_option("--object", object_id)->required();

    // let global flags appear after the subcommand too
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) allow_fallthrough(sub);
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Reporter rep{opts};
    Dialect dialect = parse_dialect(opts.dialect);

    try {
        if (*parse_cmd) {
            auto formulas = parse_many(slurp(file), dialect, multi);
            rep.run_all(formulas.size(), [&](size_t i) {
                return json{{"input", file + ":" + std::to_string(i + 1)},
                            {"op", "parse"},
                            {"formula", print(formulas[i], dialect)}};
            });
        } else if (*strat) {
            StratifyOptions sopts;
            sopts.merge_set_vars = merge_set_vars;
            std::vector<FormulaPtr> formulas;
            std::vector<std::string> names;
            Dialect strat_dialect = dialect;
            if (random_count > 0) {
                std::mt19937_64 rng(opts.seed);
                strat_dialect = Dialect::Plain;
                for (int i = 0; i < random_count; ++i) {
                    int vars = 1 + static_cast<int>(rng() % random_vars);
                    int atoms = 1 + static_cast<int>(rng() % random_atoms);
                    std::vector<FormulaPtr> parts;
                    for (int a = 0; a < atoms; ++a) {
                        auto v = [&] { return mk_set_var(std::string(1, 'a' + rng() % vars)); };
                        parts.push_back(rng() % 2 ? mk_member(v(), v()) : mk_equal(v(), v()));
                    }
                    FormulaPtr f = parts[0];
                    for (size_t p = 1; p < parts.size(); ++p) f = mk_and(f, parts[p]);
                    formulas.push_back(resolve(f, Dialect::Plain));
                    names.push_back("random:" + std::to_string(i + 1));
                }
            } else {
                if (file.empty()) throw CLI::ValidationError("stratify needs a file or --random N");
                formulas = parse_many(slurp(file), dialect, multi);
                for (size_t i = 0; i < formulas.size(); ++i)
                    names.push_back(file + ":" + std::to_string(i + 1));
            }
            rep.run_all(formulas.size(), [&](size_t i) {
                auto g = extract_constraints(formulas[i], strat_dialect, sopts);
                auto v = solve(g);
                json j = verdict_json(g, v);
                j["input"] = names[i];
                j["op"] = "stratify";
                if (oracle) {
                    int bound = std::max(static_cast<int>(g.node_labels.size()) - 1, 0);
                    bool o = brute_force_stratifiable(g, bound);
                    j["oracle"] = o ? "stratified" : "unstratified";
                    j["agrees"] = o == v.stratified;
                    if (o != v.stratified) throw std::runtime_error("oracle disagrees with the solver");
                }
                return j;
            });
        } else if (*transform) {
            if (*t_super) {
                auto axioms = supertransitivity_axioms(restrictor);
                rep.run_all(axioms.size(), [&](size_t i) {
                    return json{{"input", "axiom:" + std::to_string(i + 1)},
                                {"op", "supertransitivity"},
                                {"formula", print(axioms[i], Dialect::Plain)}};
                });
            } else {
                Dialect in_dialect = dialect;
                if (*t_raise || *t_erase) in_dialect = Dialect::Tst;
                if (*t_comp || *t_repl || *t_found) in_dialect = Dialect::Lstar;
                auto formulas = parse_many(slurp(file), in_dialect, multi);
                rep.run_all(formulas.size(), [&](size_t i) {
                    json j{{"input", file + ":" + std::to_string(i + 1)}};
                    if (*t_rel) {
                        j["op"] = "relativize";
                        j["formula"] = print(relativize(formulas[i], restrictor, in_dialect), in_dialect);
                    } else if (*t_refl) {
                        j["op"] = "reflect";
                        j["formula"] = print(reflection_axiom(formulas[i], restrictor), Dialect::Plain);
                    } else if (*t_comp) {
                        j["op"] = "comprehend";
                        j["formula"] = print(comprehension_instance(formulas[i], class_var), Dialect::Lstar);
                    } else if (*t_repl) {
                        j["op"] = "replace";
                        j["formula"] = print(replacement_instance(formulas[i], var_x, var_y), Dialect::Lstar);
                    } else if (*t_found) {
                        j["op"] = "found";
                        j["formula"] = print(foundation_instance(formulas[i], var_x), Dialect::Lstar);
                    } else if (*t_raise) {
                        j["op"] = "raise";
                        j["formula"] = print(raise_types(formulas[i], raise_k), Dialect::Tst);
                    } else {
                        j["op"] = "erase";
                        j["formula"] = print(erase_types(formulas[i]), Dialect::Plain);
                    }
                    return j;
                });
            }
        } else if (*model) {
            if (*m_build) {
                FiniteStructure m = build_vn(vn);
                if (!out_file.empty()) {
                    std::ofstream out(out_file);
                    out << m.to_json() << "\n";
                    rep.run_all(1, [&](size_t) {
                        return json{{"op", "build-vn"}, {"n", vn}, {"size", m.size()}, {"out", out_file}};
                    });
                } else {
                    rep.run_all(1, [&](size_t) {
                        json j = json::parse(m.to_json());
                        j["op"] = "build-vn";
                        j["n"] = vn;
                        return j;
                    });
                }
            } else if (*m_eval) {
                FiniteStructure m =
                    model_file.empty() ? build_vn(vn) : FiniteStructure::from_json(slurp(model_file));
                Valuation val = parse_assignment(assign_text);
                auto formulas = parse_many(slurp(file), Dialect::Plain, multi);
                rep.run_all(formulas.size(), [&](size_t i) {
                    return json{{"input", file + ":" + std::to_string(i + 1)},
                                {"op", "eval"},
                                {"value", eval_formula(formulas[i], m, val)}};
                });
            } else if (*m_refl) {
                auto formulas = parse_many(slurp(file), Dialect::Plain, multi);
                rep.run_all(1, [&](size_t) {
                    return json{{"input", file},
                                {"op", "reflect-search"},
                                {"n", vn},
                                {"m", reflect_search(formulas, vn)}};
                });
            } else if (*m_cantor) {
                FiniteStructure m = build_vn(vn);
                std::vector<std::string> elements;
                if (!element.empty()) elements.push_back(element);
                else elements = m.universe;
                rep.run_all(elements.size(), [&](size_t i) {
                    auto [k, p] = singleton_image_check(m, elements[i]);
                    return json{{"input", "V" + std::to_string(vn) + ":" + elements[i]},
                                {"op", "cantor"},
                                {"singletons", k},
                                {"powerset", p},
                                {"strictly_less", k < p}};
                });
            }
        } else if (*cat_cmd) {
            if (*c_validate) {
                cat::FinCategory c = load_category(file);
                auto violations = cat::validate_category(c);
                rep.run_all(1, [&](size_t) {
                    json v = json::array();
                    for (const auto& viol : violations)
                        v.push_back({{"law", viol.law}, {"detail", viol.detail}});
                    return json{{"input", file},
                                {"op", "validate"},
                                {"valid", violations.empty()},
                                {"violations", v}};
                });
            } else if (*c_limits) {
                auto ff = load_functor(file);
                auto violations = cat::validate_functor(ff->functor);
                if (!violations.empty())
                    throw std::invalid_argument("not a functor: " + violations[0].detail);
                rep.run_all(1, [&](size_t) {
                    auto cones = cat::cones_to(ff->functor);
                    auto limits = cat::limits_to(ff->functor);
                    json apexes = json::array();
                    for (const auto& l : limits) apexes.push_back(ff->dst.objects[l.apex]);
                    return json{{"input", file},
                                {"op", "limits"},
                                {"cones", cones.size()},
                                {"limits", limits.size()},
                                {"apexes", apexes}};
                });
            } else if (*c_freyd) {
                cat::FinCategory c = load_category(file);
                auto violations = cat::validate_category(c);
                if (!violations.empty())
                    throw std::invalid_argument("not a category: " + violations[0].detail);
                rep.run_all(1, [&](size_t) {
                    cat::FreydVerdict v = cat::freyd_check(c, max_morphisms);
                    json j{{"input", file}, {"op", "freyd"}};
                    switch (v.outcome) {
                        case cat::FreydOutcome::Preorder:
                            j["outcome"] = "preorder";
                            break;
                        case cat::FreydOutcome::MissingProduct: {
                            j["outcome"] = "not-preorder-and-missing-product";
                            json d = json::object();
                            for (size_t i = 0; i < v.diagram.size(); ++i)
                                d[c.morphisms[i].id] = c.objects[v.diagram[i]];
                            j["diagram"] = d;
                            break;
                        }
                        case cat::FreydOutcome::TheoremViolation:
                            throw std::runtime_error("theorem violation on " + file);
                    }
                    return j;
                });
            } else if (*c_rp || *c_rc || *c_sc) {
                RelDiagramFile d = load_rel_diagram(file);
                rep.run_all(1, [&](size_t) -> json {
                    json j{{"input", file}};
                    json legs = json::array();
                    if (*c_rp) {
                        cat::RelCone cone = cat::rel_product(d.universe, d.diagram);
                        for (const auto& [tag, pi] : cone.legs)
                            legs.push_back({{"tag", tag}, {"pairs", rel_pairs(d.universe, pi)}});
                        j["op"] = "rel-product";
                        j["apex"] = mask_tokens(d.universe, cone.apex);
                        j["legs"] = legs;
                        return j;
                    }
                    cat::RelCocone co = *c_rc ? cat::rel_coproduct(d.universe, d.diagram)
                                              : cat::set_coproduct(d.universe, d.diagram);
                    for (const auto& [tag, iota] : co.legs)
                        legs.push_back({{"tag", tag},
                                        {"pairs", rel_pairs(d.universe, iota)},
                                        {"functional", cat::is_function(iota)}});
                    j["op"] = *c_rc ? "rel-coproduct" : "set-coproduct";
                    j["apex"] = mask_tokens(d.universe, co.apex);
                    j["legs"] = legs;
                    return j;
                });
            } else if (*c_yon) {
                auto sf = load_set_functor(file);
                int a = sf->c.object_index(object_id);
                if (a < 0) throw std::invalid_argument("unknown object '" + object_id + "'");
                rep.run_all(1, [&](size_t) {
                    cat::YonedaReport r = cat::yoneda_check(sf->c, sf->functor, a);
                    json j{{"input", file},       {"op", "yoneda"},
                           {"object", object_id}, {"pass", r.pass},
                           {"fa", r.fa_size},     {"nat", r.nat_count}};
                    if (!r.pass) throw std::runtime_error("yoneda check failed: " + r.detail);
                    return j;
                });
            }
        }
    } catch (const ParseError& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const DialectError& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const CapError& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 4;
    } catch (const cat::FeasibilityError& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 4;
    } catch (const cat::CarrierOverflow& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return file.empty() || !std::ifstream(file).good() ? 3 : 1;
    }
    return rep.exit_code;
}
