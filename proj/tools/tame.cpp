// tools/tame.cpp - command-line front end for the tame-block library.
//
// Exit status: 0 when every expectation holds, 1 when a check fails, 2 on bad input.
// Errors are written to stderr as one JSON object per line.

#include "tame/batch.hpp"
#include "tame/tame.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using tame::BigInt;
using tame::Json;

enum class Format { text, machine };

struct Options {
    Format format = Format::text;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

void emit_error(const std::string& kind, const std::string& message, const std::string& where = {}) {
    Json record;
    record["error"] = kind;
    if (!where.empty()) record["where"] = where;
    record["message"] = message;
    std::cerr << record.dump() << "\n";
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// A bundled dataset name or a path to a document.
tame::Dataset resolve_dataset(const std::string& source) {
    for (const auto* dataset : tame::bundled_datasets()) {
        if (dataset->name == source) return *dataset;
        for (const auto& record : dataset->blocks) {
            if (record.block.group_label == source) return tame::Dataset{dataset->name, {record}};
        }
    }
    return tame::load_dataset(read_file(source));
}

std::string join(const std::vector<BigInt>& values) {
    std::string out;
    for (const auto& v : values) out += (out.empty() ? "" : ",") + v.str();
    return out;
}

std::string join(const std::set<std::string>& values) {
    std::string out;
    for (const auto& v : values) out += (out.empty() ? "" : " ") + v;
    return "{" + out + "}";
}

std::string row_text(const std::vector<int>& coefficients) {
    std::string out;
    for (int c : coefficients) out += (out.empty() ? "" : " ") + (c == 0 ? std::string(".") : std::to_string(c));
    return out;
}

Json matrix_json(const tame::DecompTemplate& tmpl, const std::vector<BigInt>& brauer) {
    return tame::to_json(tame::to_matrix(tmpl, brauer));
}

void print_solution_text(const tame::TemplateSolution<BigInt>& s) {
    const auto tmpl = tame::instantiate(*s.entry, s.n);
    std::cout << "  " << s.cls().display_tag() << "  brauer=" << join(s.brauer_degrees)
              << (tame::is_realizable(*s.entry, s.n) ? "" : "  (no blocks of this class at this n)") << "\n";
    for (std::size_t r = 0; r < tmpl.rows.size(); ++r) {
        std::cout << "    " << s.row_degrees[r].str() << "  [" << row_text(tmpl.rows[r].coefficients) << "]  x"
                  << tmpl.rows[r].multiplicity << "\n";
    }
}

Json solution_json(const tame::TemplateSolution<BigInt>& s) {
    Json j;
    j["class"] = s.cls().display_tag();
    j["family"] = std::string(tame::to_string(s.family()));
    j["n"] = s.n;
    j["realizable"] = tame::is_realizable(*s.entry, s.n);
    Json brauer = Json::array();
    for (const auto& b : s.brauer_degrees) brauer.push_back(b.str());
    j["brauer"] = std::move(brauer);
    j["matrix"] = matrix_json(tame::instantiate(*s.entry, s.n), s.brauer_degrees);
    return j;
}

// classify ------------------------------------------------------------------------------

struct ClassifyArgs {
    std::string input;
    std::string degrees;
    std::string family;
    int n = 0;
    int v2_order = 0;
    int l = 0;
    bool shortcut = false;
};

int run_classify(const ClassifyArgs& args, const Options& opts) {
    tame::Dataset dataset;
    if (!args.degrees.empty()) {
        if (args.n == 0) throw UsageError("--degrees needs --n");
        tame::BlockRecord record;
        record.block.group_label = "input";
        record.block.n = args.n;
        std::stringstream list(args.degrees);
        std::string item;
        while (std::getline(list, item, ',')) {
            auto at = item.find('x');
            std::uint64_t count = 1;
            if (at != std::string::npos) {
                count = std::stoull(item.substr(at + 1));
                item = item.substr(0, at);
            }
            record.block.characters.push_back({tame::parse_positive(item), count});
        }
        dataset.blocks.push_back(std::move(record));
    } else if (!args.input.empty()) {
        dataset = resolve_dataset(args.input);
    } else {
        throw UsageError("classify needs an input document or --degrees");
    }
    for (auto& record : dataset.blocks) {
        if (!args.family.empty()) record.block.family = tame::parse_family(args.family);
        if (args.n != 0) record.block.n = args.n;
        if (args.v2_order != 0) record.block.v2_group_order = args.v2_order;
        if (args.l != 0) record.block.l = args.l;
    }

    Json all = Json::array();
    bool any_unmatched = false;
    for (const auto& record : dataset.blocks) {
        const auto solutions = tame::match_templates(record.block);
        const auto tags = tame::matched_tags(solutions);
        any_unmatched = any_unmatched || solutions.empty();
        std::optional<std::string> shortcut;
        std::optional<std::string> shortcut_error;
        if (args.shortcut) {
            try {
                shortcut = tame::classify_dihedral_shortcut(tame::heighted(record.block));
            } catch (const std::domain_error& e) {
                shortcut_error = e.what();
            }
        }
        if (opts.format == Format::text) {
            std::cout << record.block.group_label << " (n=" << record.block.n;
            if (record.block.family) std::cout << ", " << tame::to_string(*record.block.family);
            std::cout << "): " << (tags.empty() ? std::string("no tame template fits") : join(tags)) << "\n";
            for (const auto& s : solutions) print_solution_text(s);
            if (args.shortcut) {
                if (shortcut) {
                    std::cout << "  shortcut: " << *shortcut << (tags.count(*shortcut) ? " (agrees)" : " (disagrees)")
                              << "\n";
                } else {
                    std::cout << "  shortcut: not applicable (" << *shortcut_error << ")\n";
                }
            }
        } else {
            Json j;
            j["group"] = record.block.group_label;
            j["classes"] = tags;
            Json js = Json::array();
            for (const auto& s : solutions) js.push_back(solution_json(s));
            j["solutions"] = std::move(js);
            if (args.shortcut) {
                j["shortcut"] = shortcut ? Json(*shortcut) : Json(nullptr);
                if (shortcut) j["shortcut_agrees"] = tags.count(*shortcut) > 0;
            }
            all.push_back(std::move(j));
        }
    }
    if (opts.format == Format::machine) std::cout << all.dump(2) << "\n";
    return any_unmatched ? 1 : 0;
}

// catalog -------------------------------------------------------------------------------

int run_catalog(const std::string& family, const std::string& tag, int n, const Options& opts) {
    Json all = Json::array();
    for (const auto& entry : tame::catalog()) {
        if (!family.empty() && entry.cls.family != tame::parse_family(family)) continue;
        if (!tag.empty() && &entry != &tame::find_class(entry.cls.family, tag)) continue;
        const int at = n == 0 ? entry.cls.min_n : n;
        if (at < entry.cls.min_n) continue;
        const auto tmpl = tame::instantiate(entry, at);
        const bool realizable = tame::is_realizable(entry, at);
        if (opts.format == Format::text) {
            std::cout << tame::to_string(entry.cls.family) << " " << entry.cls.display_tag() << "  n=" << at
                      << "  k=" << tmpl.k() << "  l=" << tmpl.columns
                      << (realizable ? "" : "  (no blocks at this n)") << "\n";
            for (const auto& row : tmpl.rows) {
                std::cout << "  [" << row_text(row.coefficients) << "]  height " << row.height << "  x"
                          << row.multiplicity << "\n";
            }
        } else {
            Json j;
            j["family"] = std::string(tame::to_string(entry.cls.family));
            j["class"] = entry.cls.display_tag();
            j["n"] = at;
            j["k"] = tmpl.k();
            j["l"] = tmpl.columns;
            j["realizable"] = realizable;
            Json rows = Json::array();
            for (const auto& row : tmpl.rows) {
                Json r;
                r["coef"] = row.coefficients;
                r["height"] = row.height;
                r["mult"] = row.multiplicity;
                rows.push_back(std::move(r));
            }
            j["rows"] = std::move(rows);
            all.push_back(std::move(j));
        }
    }
    if (opts.format == Format::machine) std::cout << all.dump(2) << "\n";
    return 0;
}

// core / altblocks ----------------------------------------------------------------------

int run_core(const std::string& partition, int ell, const Options& opts) {
    const auto result = tame::ell_core(tame::Partition::parse(partition), ell);
    if (opts.format == Format::text) {
        std::cout << "core=" << result.core.to_string() << " weight=" << result.weight << "\n";
    } else {
        Json j;
        j["core"] = result.core.to_string();
        j["weight"] = result.weight;
        std::cout << j.dump() << "\n";
    }
    return 0;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("malformed range '" + text + "', expected A..B");
    }
}

int run_altblocks(const std::string& range, const Options& opts) {
    const auto [lo, hi] = parse_range(range);
    if (lo > hi) throw UsageError("empty range '" + range + "'");
    Json all = Json::array();
    for (int n = lo; n <= hi; ++n) {
        const bool exists = tame::alt_dihedral_block_exists(n);
        if (opts.format == Format::text) {
            std::cout << "n=" << n << " " << (exists ? "true" : "false") << "\n";
        } else {
            all.push_back(Json{{"n", n}, {"exists", exists}});
        }
    }
    if (opts.format == Format::machine) std::cout << all.dump(2) << "\n";
    return 0;
}

// extend --------------------------------------------------------------------------------

struct ExtendArgs {
    std::string input;
    std::string direction = "up";
    std::uint64_t k = 0;
    std::size_t l = 0;
    std::uint64_t cap = 1'000'000;
    std::string family;
    int n = 0;
};

void print_matrix_text(const tame::DecompMatrix& m) {
    std::cout << "    brauer:";
    for (const auto& b : m.brauer) std::cout << " " << (b ? b->str() : std::string("?"));
    std::cout << "\n";
    for (const auto& row : m.rows) {
        std::cout << "    " << row.degree.str() << "  [" << row_text(row.coefficients) << "]  x" << row.multiplicity
                  << "\n";
    }
}

int run_extend(const ExtendArgs& args, const Options& opts) {
    const auto matrix = tame::load_matrix(read_file(args.input));
    tame::CliffordOptions options;
    options.cap = args.cap;
    if (!args.family.empty()) {
        if (args.n == 0) throw UsageError("--family needs --n for height filtering");
        options.target = tame::HeightTarget{tame::parse_family(args.family), args.n};
    }
    std::vector<tame::CliffordCandidate> candidates;
    if (args.direction == "up") {
        candidates = tame::induce_candidates(matrix, args.k, args.l, options);
    } else if (args.direction == "down") {
        candidates = tame::restrict_candidates(matrix, args.k, args.l, options);
    } else {
        throw UsageError("--direction must be up or down");
    }
    bool unconstrained = false;
    for (const auto& c : candidates) unconstrained = unconstrained || c.pattern.unconstrained_columns;
    if (opts.format == Format::text) {
        std::cout << candidates.size() << " candidate(s)\n";
        if (unconstrained) std::cout << "note: some columns were paired without known Brauer degrees\n";
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            std::cout << "  candidate " << i + 1 << ":\n";
            print_matrix_text(candidates[i].matrix);
        }
    } else {
        Json j;
        j["direction"] = args.direction;
        j["ambiguous_columns"] = unconstrained;
        Json list = Json::array();
        for (const auto& c : candidates) {
            Json entry;
            entry["matrix"] = tame::to_json(c.matrix);
            Json rows = Json::array();
            for (const auto& orbit : c.pattern.row_orbits) {
                Json o;
                o["row"] = orbit.row;
                o["partner"] = orbit.partner ? Json(*orbit.partner) : Json(nullptr);
                o["count"] = orbit.count;
                rows.push_back(std::move(o));
            }
            entry["row_orbits"] = std::move(rows);
            entry["column_orbits"] = c.pattern.column_orbits;
            list.push_back(std::move(entry));
        }
        j["candidates"] = std::move(list);
        std::cout << j.dump(2) << "\n";
    }
    return candidates.empty() ? 1 : 0;
}

// poly ----------------------------------------------------------------------------------

void print_value(const Options& opts, const std::string& key, const Json& value, const std::string& text) {
    if (opts.format == Format::text) {
        std::cout << text << "\n";
    } else {
        std::cout << Json{{key, value}}.dump() << "\n";
    }
}

std::string rational_text(const tame::Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// batch / selftest ----------------------------------------------------------------------

bool report_batch(const tame::Dataset& dataset, const Options& opts, Json* machine) {
    const auto verdicts = tame::evaluate(dataset);
    std::size_t passed = 0;
    Json records = Json::array();
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto& v = verdicts[i];
        const auto& record = dataset.blocks[i];
        passed += v.ok() ? 1 : 0;
        if (opts.format == Format::text) {
            std::cout << (v.ok() ? "ok   " : "FAIL ") << v.group << ": matched " << join(v.matched);
            if (record.expected) std::cout << ", expected " << join(std::set<std::string>(record.expected->begin(), record.expected->end()));
            if (record.provenance) std::cout << " (" << *record.provenance << ")";
            if (v.error) std::cout << ", error: " << *v.error;
            if (!v.brauer_ok) std::cout << ", Brauer degrees differ from the printed ones";
            std::cout << "\n";
            for (const auto& s : v.solutions) {
                std::cout << "       " << s.cls().display_tag() << " brauer=" << join(s.brauer_degrees) << "\n";
            }
        } else {
            Json j;
            j["group"] = v.group;
            j["matched"] = v.matched;
            if (record.expected) j["expected"] = *record.expected;
            if (record.provenance) j["provenance"] = *record.provenance;
            j["tags_ok"] = v.tags_ok;
            j["brauer_ok"] = v.brauer_ok;
            if (v.error) j["error"] = *v.error;
            Json sols = Json::array();
            for (const auto& s : v.solutions) sols.push_back(solution_json(s));
            j["solutions"] = std::move(sols);
            records.push_back(std::move(j));
        }
    }
    if (opts.format == Format::text) {
        std::cout << dataset.name << ": " << passed << "/" << verdicts.size() << " matches\n";
    } else if (machine) {
        machine->push_back(Json{{"dataset", dataset.name}, {"passed", passed}, {"total", verdicts.size()}, {"records", records}});
    }
    return passed == verdicts.size();
}

int run_batch(const std::string& source, const Options& opts) {
    Json machine = Json::array();
    const bool ok = report_batch(resolve_dataset(source), opts, &machine);
    if (opts.format == Format::machine) std::cout << machine.dump(2) << "\n";
    return ok ? 0 : 1;
}

int run_selftest(const Options& opts) {
    Json machine = Json::array();
    bool ok = true;
    for (const auto* dataset : tame::bundled_datasets()) ok = report_batch(*dataset, opts, &machine) && ok;

    std::vector<std::pair<std::string, std::function<bool()>>> checks{
        {"core 8,1 at 2 is 2,1 with weight 3",
         [] {
             auto r = tame::ell_core(tame::Partition({8, 1}), 2);
             return r.core == tame::Partition({2, 1}) && r.weight == 3;
         }},
        {"alternating dihedral blocks for 5..20 at 6 7 9 12 16",
         [] {
             std::vector<int> hits;
             for (int n = 5; n <= 20; ++n) {
                 if (tame::alt_dihedral_block_exists(n)) hits.push_back(n);
             }
             return hits == std::vector<int>{6, 7, 9, 12, 16};
         }},
        {"q^2+q-1 is not cyclotomic", [] { return !tame::is_cyclotomic(tame::parse_poly("q^2+q-1")); }},
        {"q^2+q-1 has no positive integer root",
         [] { return tame::positive_integer_roots(tame::parse_poly("q^2+q-1")).empty(); }},
        {"family blocks for q < 100 match their classes uniquely (psl2, pgl2, gu2, gl2) or inclusively (sl2)",
         [] {
             for (std::int64_t q = 3; q < 100; q += 2) {
                 if (!tame::is_prime_power(q)) continue;
                 for (auto family : {tame::GroupFamily::psl2, tame::GroupFamily::pgl2, tame::GroupFamily::sl2,
                                     tame::GroupFamily::gu2, tame::GroupFamily::gl2}) {
                     std::optional<tame::FamilyBlock> fb;
                     try {
                         fb = tame::family_block(family, q);
                     } catch (const std::invalid_argument&) {
                         continue;
                     }
                     if (!fb->solution) continue;
                     auto found = tame::match_templates(tame::heighted(fb->block), fb->block.family);
                     const bool contains = std::any_of(found.begin(), found.end(), [&](const auto& s) {
                         return s.entry == fb->solution->entry;
                     });
                     if (!contains) return false;
                     if (family != tame::GroupFamily::sl2 && found.size() != 1) return false;
                 }
             }
             return true;
         }},
    };
    Json results = Json::array();
    for (const auto& [name, check] : checks) {
        const bool passed = check();
        ok = ok && passed;
        if (opts.format == Format::text) {
            std::cout << (passed ? "ok   " : "FAIL ") << name << "\n";
        } else {
            results.push_back(Json{{"check", name}, {"passed", passed}});
        }
    }
    if (opts.format == Format::machine) std::cout << Json{{"datasets", machine}, {"checks", results}, {"ok", ok}}.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decomposition matrices and classification of tame 2-blocks"};
    app.require_subcommand(1);
    Options opts;
    std::map<std::string, Format> formats{{"text", Format::text}, {"machine", Format::machine}};
    app.add_option("--format", opts.format, "Output format: text or machine")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    int status = 0;

    ClassifyArgs classify;
    auto* cmd_classify = app.add_subcommand("classify", "Match a block's degrees against every template");
    cmd_classify->add_option("input", classify.input, "Block document, bundled dataset or group name, or - for stdin");
    cmd_classify->add_option("--degrees", classify.degrees, "Comma-separated degrees, DxM for multiplicity M");
    cmd_classify->add_option("--family", classify.family, "dihedral, semidihedral or quaternion");
    cmd_classify->add_option("--n", classify.n, "Defect exponent")->check(CLI::Range(3, 62));
    cmd_classify->add_option("--v2-order", classify.v2_order, "2-adic valuation of the group order");
    cmd_classify->add_option("--l", classify.l, "Number of Brauer characters, when known")->check(CLI::Range(1, 3));
    cmd_classify->add_flag("--shortcut", classify.shortcut, "Also run the dihedral reading-off recipe");
    cmd_classify->callback([&] { status = run_classify(classify, opts); });

    std::string cat_family;
    std::string cat_tag;
    int cat_n = 0;
    auto* cmd_catalog = app.add_subcommand("catalog", "Print decomposition-matrix templates");
    cmd_catalog->add_option("--family", cat_family, "Restrict to one family");
    cmd_catalog->add_option("--tag", cat_tag, "Restrict to one class");
    cmd_catalog->add_option("--n", cat_n, "Defect exponent (default: smallest valid)")->check(CLI::Range(3, 62));
    cmd_catalog->callback([&] { status = run_catalog(cat_family, cat_tag, cat_n, opts); });

    std::string core_partition;
    int core_ell = 2;
    auto* cmd_core = app.add_subcommand("core", "ell-core and weight of a partition");
    cmd_core->add_option("partition", core_partition, "Parts separated by commas, - for empty")->required();
    cmd_core->add_option("--ell", core_ell, "Hook length")->check(CLI::Range(2, 1'000'000));
    cmd_core->callback([&] { status = run_core(core_partition, core_ell, opts); });

    std::string alt_range;
    auto* cmd_alt = app.add_subcommand("altblocks", "Whether Alt(n) has a dihedral 2-block of defect >= 3");
    cmd_alt->add_option("range", alt_range, "n or A..B with A >= 5")->required();
    cmd_alt->callback([&] { status = run_altblocks(alt_range, opts); });

    ExtendArgs extend;
    auto* cmd_extend = app.add_subcommand("extend", "Index-2 induction (up) or restriction (down) candidates");
    cmd_extend->add_option("input", extend.input, "Matrix document or - for stdin")->required();
    cmd_extend->add_option("--direction", extend.direction, "up or down")->check(CLI::IsMember({"up", "down"}));
    cmd_extend->add_option("--k", extend.k, "Target number of ordinary characters")->required();
    cmd_extend->add_option("--l", extend.l, "Target number of Brauer characters")->required();
    cmd_extend->add_option("--cap", extend.cap, "Abort after this many patterns");
    cmd_extend->add_option("--family", extend.family, "Keep only candidates with this family's heights");
    cmd_extend->add_option("--n", extend.n, "Defect exponent of the target block");
    cmd_extend->callback([&] { status = run_extend(extend, opts); });

    auto* cmd_poly = app.add_subcommand("poly", "Polynomials in q");
    cmd_poly->require_subcommand(1);
    int cyc_d = 1;
    auto* poly_cyc = cmd_poly->add_subcommand("cyclotomic", "The d-th cyclotomic polynomial");
    poly_cyc->add_option("d", cyc_d)->required()->check(CLI::Range(1, 10'000));
    poly_cyc->callback([&] {
        const auto p = tame::cyclotomic(cyc_d);
        print_value(opts, "poly", tame::to_string(p), tame::to_string(p));
    });
    std::string poly_text;
    auto* poly_is = cmd_poly->add_subcommand("is-cyclotomic", "d with p = Phi_d, if any");
    poly_is->add_option("poly", poly_text)->required();
    poly_is->callback([&] {
        const auto d = tame::is_cyclotomic(tame::parse_poly(poly_text));
        print_value(opts, "d", d ? Json(*d) : Json(nullptr), d ? std::to_string(*d) : std::string("none"));
    });
    auto* poly_bound = cmd_poly->add_subcommand("bound", "Root bound 2 max|c| / |lead|");
    poly_bound->add_option("poly", poly_text)->required();
    poly_bound->callback([&] {
        const auto b = rational_text(tame::root_bound(tame::parse_poly(poly_text)));
        print_value(opts, "bound", b, b);
    });
    auto* poly_roots = cmd_poly->add_subcommand("roots", "Positive integer roots");
    poly_roots->add_option("poly", poly_text)->required();
    poly_roots->callback([&] {
        const auto roots = tame::positive_integer_roots(tame::parse_poly(poly_text));
        Json list = Json::array();
        for (const auto& r : roots) list.push_back(r.str());
        print_value(opts, "roots", list, roots.empty() ? std::string("none") : join(roots));
    });
    std::string eval_at;
    auto* poly_eval = cmd_poly->add_subcommand("eval", "Value at an integer");
    poly_eval->add_option("poly", poly_text)->required();
    poly_eval->add_option("--at", eval_at)->required();
    poly_eval->callback([&] {
        const auto v = tame::parse_poly(poly_text).eval(BigInt(eval_at)).str();
        print_value(opts, "value", v, v);
    });
    std::string v2_arg;
    auto* poly_v2 = cmd_poly->add_subcommand("v2", "2-adic valuation of a positive integer");
    poly_v2->add_option("m", v2_arg)->required();
    poly_v2->callback([&] {
        const auto v = tame::v2(tame::parse_positive(v2_arg));
        print_value(opts, "v2", v, std::to_string(v));
    });
    std::vector<std::string> table_polys;
    std::string table_name;
    std::string q_min = "2";
    auto* poly_coincide = cmd_poly->add_subcommand("coincide", "Where a degree meets a table of degrees");
    poly_coincide->add_option("candidate", poly_text)->required();
    poly_coincide->add_option("entries", table_polys, "Table polynomials");
    poly_coincide->add_option("--table", table_name, "Bundled table: psl2, pgl2, gl2 or gu2");
    poly_coincide->add_option("--q-min", q_min, "Smallest q reported");
    poly_coincide->callback([&] {
        std::vector<tame::IntPoly> table;
        if (!table_name.empty()) table = tame::bundled_poly_table(table_name).degrees;
        for (const auto& t : table_polys) table.push_back(tame::parse_poly(t));
        const auto hits = tame::degree_coincides(tame::parse_poly(poly_text), table, BigInt(q_min));
        Json list = Json::array();
        std::string text;
        for (const auto& h : hits) {
            list.push_back(Json{{"q", h.q ? Json(h.q->str()) : Json("all")}, {"index", h.index}});
            text += (text.empty() ? "" : "\n") + std::string("q=") + (h.q ? h.q->str() : "all") + " entry " +
                    std::to_string(h.index) + " (" + tame::to_string(table[h.index]) + ")";
        }
        print_value(opts, "coincidences", list, text.empty() ? std::string("none") : text);
    });

    std::string batch_source;
    auto* cmd_batch = app.add_subcommand("batch", "Classify a dataset and compare with its expected classes");
    cmd_batch->add_option("dataset", batch_source, "Bundled dataset name or document path")->required();
    cmd_batch->callback([&] { status = run_batch(batch_source, opts); });

    auto* cmd_selftest = app.add_subcommand("selftest", "Run the bundled datasets and built-in checks");
    cmd_selftest->callback([&] { status = run_selftest(opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        emit_error("usage", e.what());
        return 2;
    } catch (const tame::DocumentError& e) {
        emit_error("document", e.detail(), e.where());
        return 2;
    } catch (const tame::SearchLimitExceeded& e) {
        emit_error("search-limit", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("input", e.what());
        return 2;
    }
    return status;
}
