#include <CLI11.hpp>

#include <iostream>

#include "skewgor/catalog.hpp"
#include "skewgor/formulas.hpp"
#include "skewgor/gbalgebra.hpp"
#include "skewgor/koszul.hpp"
#include "skewgor/resolution.hpp"

using namespace skewgor;

namespace {

// exit codes: 0 success, 1 computation refusal (certificate or precondition),
// 2 input error
struct Refusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string catalog_dir = Catalog::default_dir();
    std::string format = "text";
    int threads = 1;
    uint32_t characteristic = 0;
};

MonomialOrder parse_order(const std::string& text, int n) {
    if (text.empty()) return MonomialOrder(n);
    // "X3>X1>X2": a chain listing every generator
    std::vector<int> chain;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '>')) {
        size_t k = 0;
        while (k < part.size() && !std::isdigit(static_cast<unsigned char>(part[k]))) ++k;
        chain.push_back(std::stoi(part.substr(k)) - 1);
    }
    return MonomialOrder(n, chain);
}

std::pair<int, int> parse_box(const std::string& text) {
    size_t x = text.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("box must look like 4x10");
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
}

AlgebraPresentation input_presentation(const Catalog* cat, const std::string& case_id,
                                       const std::string& inline_text, bool want_dual) {
    AlgebraPresentation pres;
    if (!case_id.empty()) {
        const CatalogEntry& e = cat->load(case_id);
        if (e.kind == "trivector") {
            TriVector F = cat->form(e);
            if (want_dual) return koszul_dual_presentation(F);
            throw Refusal("case " + case_id + " is a trivector; use the macaulay subcommand");
        }
        pres = cat->presentation(e);
    } else if (!inline_text.empty()) {
        pres = parse_presentation(inline_text);
    } else {
        throw CLI::ValidationError("need --case or --input");
    }
    if (want_dual) pres = quadratic_dual(pres);
    return pres;
}

AlgebraPtr input_ring(const Catalog* cat, const std::string& case_id,
                      const std::string& inline_text, int top) {
    if (!case_id.empty()) return cat->ring(cat->load(case_id), top);
    AlgebraPresentation pres = parse_presentation(inline_text);
    return presentation_algebra(pres, top);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skewgor: skew-Gorenstein rings, Koszul duals, and their series"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--catalog-dir", common.catalog_dir, "catalog data directory");
    app.add_option("--format", common.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", common.threads, "worker threads");

    std::string form_text, case_id, input_text, order_text, emit, box_text, formula;
    int degree = 20, hom_bound = 5, top = 12;

    auto* macaulay = app.add_subcommand("macaulay", "Gorenstein ring of a 3-form");
    macaulay->add_option("--form", form_text, "trivector, e.g. \"e1^e2^e3 + e3^e4^e5\"");
    macaulay->add_option("--case", case_id, "catalog id");
    macaulay->add_option("--emit", emit, "hilbert | relations | cubic-corrections | quadratic")
        ->default_val("hilbert");

    auto* recipe = app.add_subcommand("recipe", "Koszul dual presentation of a 3-form");
    recipe->add_option("--form", form_text, "trivector text");
    recipe->add_option("--case", case_id, "catalog id");

    auto* dual = app.add_subcommand("dual", "quadratic dual of a presentation");
    dual->add_option("--case", case_id, "catalog id");
    dual->add_option("--input", input_text, "presentation text");

    auto* gb = app.add_subcommand("gb", "truncated Groebner basis of a free presentation");
    gb->add_option("--case", case_id, "catalog id");
    gb->add_option("--input", input_text, "presentation text");
    gb->add_flag("--dual", "use the quadratic dual of the named presentation");
    gb->add_option("--degree", degree, "truncation degree")->default_val(20);
    gb->add_option("--order", order_text, "generator priority, e.g. X3>X1>X2");
    gb->add_option("--emit", emit, "basis | hilbert | normal-words")->default_val("hilbert");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a presentation");
    hilbert->add_option("--case", case_id, "catalog id");
    hilbert->add_option("--input", input_text, "presentation text");
    hilbert->add_option("--degree", degree, "truncation")->default_val(12);

    auto* resolve = app.add_subcommand("resolve", "minimal resolution Betti table");
    resolve->add_option("--case", case_id, "catalog id");
    resolve->add_option("--input", input_text, "presentation text");
    resolve->add_option("--box", box_text, "HxJ")->default_val("5x12");
    auto* tor = app.add_subcommand("tor", "bigraded Tor table (alias of resolve)");
    tor->add_option("--case", case_id, "catalog id");
    tor->add_option("--input", input_text, "presentation text");
    tor->add_option("--box", box_text, "HxJ")->default_val("5x12");

    auto* bass = app.add_subcommand("bass", "Bass table of a finite ring");
    bass->add_option("--case", case_id, "catalog id");
    bass->add_option("--input", input_text, "presentation text");
    bass->add_option("--box", box_text, "HxJ")->default_val("4x10");

    auto* ktest = app.add_subcommand("koszul-test", "diagonality of the Tor table");
    ktest->add_option("--case", case_id, "catalog id");
    ktest->add_option("--input", input_text, "presentation text");
    ktest->add_option("--bound", hom_bound, "homological bound")->default_val(5);
    ktest->add_flag("--dual", "test the quadratic dual instead");

    auto* verify = app.add_subcommand("verify", "check a series formula on a catalog case");
    verify->add_option("--formula", formula, "lofwall | golod | gulliksen | bogvad")->required();
    verify->add_option("--case", case_id, "catalog id")->required();
    verify->add_option("--box", box_text, "HxJ")->default_val("4x10");

    auto* catalog_cmd = app.add_subcommand("catalog", "list or reproduce catalog entries");
    std::string report_path;
    bool run_all = false, list_only = false;
    catalog_cmd->add_flag("--list", list_only, "list ids");
    catalog_cmd->add_flag("--all", run_all, "run every entry");
    catalog_cmd->add_option("--case", case_id, "single id to run");
    catalog_cmd->add_option("--report", report_path, "write a JSON report");
    catalog_cmd->add_option("--degree", degree, "series comparison depth")->default_val(12);
    catalog_cmd->add_flag("--skip-slow", "skip entries marked slow");

    auto* cond = app.add_subcommand("check-condition", "surjectivity conditions 5.i-iii");
    cond->add_option("--case", case_id, "catalog id");
    cond->add_option("--input", input_text, "presentation text");
    std::string which = "5.iii";
    cond->add_option("--which", which, "5.i | 5.ii | 5.iii")->default_val("5.iii");
    cond->add_option("--bound", hom_bound, "homological bound")->default_val(4);

    CLI11_PARSE(app, argc, argv);

    try {
        std::unique_ptr<Catalog> cat;
        auto catalog = [&]() -> const Catalog* {
            if (!cat) cat = std::make_unique<Catalog>(common.catalog_dir);
            return cat.get();
        };
        bool json = common.format == "json";

        if (app.got_subcommand(macaulay) || app.got_subcommand(recipe)) {
            TriVector F = form_text.empty() ? catalog()->form(catalog()->load(case_id))
                                            : TriVector::parse(form_text);
            if (app.got_subcommand(recipe)) {
                AlgebraPresentation d = koszul_dual_presentation(F);
                std::cout << (json ? "{\"dual\": \"" + d.str() + "\"}" : d.str()) << "\n";
                return 0;
            }
            if (emit == "hilbert") {
                SeriesUni h = macaulay_ring(F)->hilbert(6);
                std::cout << (json ? h.json() : h.str()) << "\n";
            } else if (emit == "quadratic") {
                SeriesUni h = quadratic_part_ring(F)->hilbert(6);
                std::cout << (json ? h.json() : h.str()) << "\n";
            } else if (emit == "cubic-corrections") {
                for (const auto& c : cubic_corrections(F)) std::cout << c.str() << "\n";
            } else if (emit == "relations") {
                auto R = macaulay_ring(F);
                auto E = exterior_algebra(F.n());
                for (int d = 2; d <= 3; ++d)
                    for (const auto& r : R->ideal_basis(d))
                        std::cout << E->element(d, r).str() << "\n";
            } else {
                throw CLI::ValidationError("unknown --emit");
            }
            return 0;
        }

        if (app.got_subcommand(dual)) {
            AlgebraPresentation d = input_presentation(catalog(), case_id, input_text, true);
            std::cout << (json ? "{\"dual\": \"" + d.str() + "\"}" : d.str()) << "\n";
            return 0;
        }

        if (app.got_subcommand(gb)) {
            bool want_dual = gb->count("--dual") > 0;
            AlgebraPresentation pres =
                input_presentation(catalog(), case_id, input_text, want_dual);
            if (pres.ambient != Ambient::free)
                throw Refusal("gb operates on free presentations; pass --dual for a ring case");
            MonomialOrder ord = parse_order(order_text, pres.n());
            auto t0 = std::chrono::steady_clock::now();
            GroebnerBasis G = buchberger_truncated(pres.n(), pres.relations, degree, ord,
                                                   common.threads);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            if (emit == "basis") {
                if (json) {
                    std::cout << "{\"certificate\": \"" << G.certificate_str()
                              << "\", \"elements\": [";
                    for (size_t i = 0; i < G.elems().size(); ++i)
                        std::cout << (i ? "," : "") << "\"" << G.elems()[i].str() << "\"";
                    std::cout << "], \"ms\": " << ms << "}\n";
                } else {
                    std::cout << "certificate: " << G.certificate_str() << " ("
                              << G.elems().size() << " elements, " << ms << " ms)\n";
                    for (const auto& g : G.elems()) std::cout << g.str() << "\n";
                }
            } else if (emit == "hilbert") {
                auto counts = G.quotient_dims(degree);
                if (json) {
                    std::cout << "{\"certificate\": \"" << G.certificate_str()
                              << "\", \"dims\": [";
                    for (size_t i = 0; i < counts.size(); ++i)
                        std::cout << (i ? "," : "") << counts[i].get_str();
                    std::cout << "], \"ms\": " << ms << "}\n";
                } else {
                    std::cout << "certificate: " << G.certificate_str() << "\n";
                    for (int d = 0; d <= degree; ++d)
                        std::cout << "dim_" << d << " = " << counts[d].get_str() << "\n";
                }
            } else if (emit == "normal-words") {
                int d = std::min(degree, 6);
                for (const auto& w : G.normal_words(d)) std::cout << w.str() << "\n";
            } else {
                throw CLI::ValidationError("unknown --emit");
            }
            return 0;
        }

        if (app.got_subcommand(hilbert)) {
            if (!input_text.empty() || !case_id.empty()) {
                AlgebraPresentation pres;
                if (!case_id.empty()) {
                    const CatalogEntry& e = catalog()->load(case_id);
                    if (e.kind == "trivector") {
                        SeriesUni h = macaulay_ring(catalog()->form(e))->hilbert(degree);
                        std::cout << (json ? h.json() : h.str()) << "\n";
                        return 0;
                    }
                    pres = catalog()->presentation(e);
                } else {
                    pres = parse_presentation(input_text);
                }
                SeriesUni h = pres.ambient == Ambient::free
                                  ? hilbert_series_of_quotient(pres, degree, nullptr,
                                                               common.threads)
                                  : presentation_algebra(pres, degree)->hilbert(degree);
                std::cout << (json ? h.json() : h.str()) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(resolve) || app.got_subcommand(tor)) {
            auto [H, J] = parse_box(box_text);
            AlgebraPtr A = input_ring(catalog(), case_id, input_text, J);
            BigradedTable T = tor_table(A, H, J);
            std::cout << (json ? T.json() : T.grid_str());
            return 0;
        }

        if (app.got_subcommand(bass)) {
            auto [H, J] = parse_box(box_text);
            AlgebraPtr A = input_ring(catalog(), case_id, input_text, J + 4);
            BigradedTable T = bass_series_table(A, H, J);
            std::cout << (json ? T.json() : T.grid_str());
            return 0;
        }

        if (app.got_subcommand(ktest)) {
            KoszulVerdict v;
            if (ktest->count("--dual") > 0) {
                AlgebraPresentation pres =
                    input_presentation(catalog(), case_id, input_text, true);
                int J = hom_bound + 5;
                auto B = gb_algebra(pres, J + 1, J, nullptr, common.threads);
                ResolveOptions ro;
                ro.H = hom_bound;
                ro.J = J;
                ro.presented_quadratic = &pres.relations;
                v.H = ro.H;
                v.J = ro.J;
                ro.on_generators = [&v](int i, int j, long dim) {
                    if (i != j) {
                        v.koszul = false;
                        v.witness_i = i;
                        v.witness_j = j;
                        v.witness_dim = dim;
                        return false;
                    }
                    return true;
                };
                minimal_resolution(B, ro);
            } else {
                AlgebraPtr A = input_ring(catalog(), case_id, input_text, 3 * hom_bound);
                v = koszulness_test(A, hom_bound, -1, common.threads);
            }
            std::cout << (json ? v.json() : v.str()) << "\n";
            return 0;
        }

        if (app.got_subcommand(verify)) {
            auto [H, J] = parse_box(box_text);
            const CatalogEntry& e = catalog()->load(case_id);
            FormulaReport rep;
            if (formula == "bogvad") {
                rep = verify_bogvad(catalog()->ring(e, J), H, J, case_id);
            } else if (formula == "golod") {
                rep = verify_golod(catalog()->ring(e, J), H, J, case_id);
            } else if (formula == "gulliksen") {
                if (e.kind != "extension") throw Refusal("gulliksen expects an extension case");
                AlgebraPtr base = catalog()->ring(catalog()->load(e.def), J);
                GradedModule I = matlis_dual(base);
                rep = verify_gulliksen(base, I, trivial_extension(base, I), H, J, case_id);
            } else if (formula == "lofwall") {
                AlgebraPresentation dualp;
                AlgebraPtr A;
                if (e.kind == "trivector") {
                    TriVector F = catalog()->form(e);
                    dualp = koszul_dual_presentation(F);
                    A = macaulay_ring(F);
                } else {
                    dualp = quadratic_dual(catalog()->presentation(e));
                    A = catalog()->ring(e, J);
                }
                SeriesUni ds = hilbert_series_of_quotient(dualp, std::min(H + 1, J), nullptr,
                                                          common.threads);
                rep = verify_lofwall(A, ds, H, J, case_id);
            } else {
                throw CLI::ValidationError("unknown --formula");
            }
            std::cout << (json ? rep.json() : rep.str()) << "\n";
            return rep.holds ? 0 : 1;
        }

        if (app.got_subcommand(catalog_cmd)) {
            const Catalog* c = catalog();
            if (list_only) {
                for (const auto& id : c->ids()) std::cout << id << "\n";
                return 0;
            }
            RunOptions ro;
            ro.series_degree = degree;
            ro.threads = common.threads;
            ro.skip_slow = catalog_cmd->count("--skip-slow") > 0;
            std::vector<std::string> ids =
                run_all ? c->ids() : std::vector<std::string>{case_id};
            bool ok = true;
            std::ostringstream jreport;
            jreport << "[";
            for (size_t i = 0; i < ids.size(); ++i) {
                RunReport rep = run_entry(*c, ids[i], ro);
                ok = ok && rep.all_pass();
                if (i) jreport << ",";
                jreport << rep.json();
                std::cout << (json ? rep.json() + "\n" : rep.str());
            }
            jreport << "]";
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                out << jreport.str() << "\n";
            }
            return ok ? 0 : 1;
        }

        if (app.got_subcommand(cond)) {
            AlgebraPtr A = input_ring(catalog(), case_id, input_text, 8);
            SurjCondition w = which == "5.i"    ? SurjCondition::c5i
                              : which == "5.ii" ? SurjCondition::c5ii
                                                : SurjCondition::c5iii;
            ConditionReport rep = condition_check(A, w, hom_bound);
            std::cout << rep.str() << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const Refusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
