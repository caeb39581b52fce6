#include "skewgor/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "skewgor/formulas.hpp"
#include "skewgor/gbalgebra.hpp"
#include "skewgor/koszul.hpp"
#include "skewgor/resolution.hpp"

#ifndef SKEWGOR_DATA_DIR
#define SKEWGOR_DATA_DIR "data/catalog"
#endif

namespace skewgor {

namespace fs = std::filesystem;

static std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

Catalog::Catalog(std::string dir) : dir_(std::move(dir)) {
    if (!fs::exists(dir_)) throw std::invalid_argument("catalog: directory not found: " + dir_);
    for (const auto& de : fs::directory_iterator(dir_)) {
        if (de.path().extension() != ".ent") continue;
        std::ifstream in(de.path());
        CatalogEntry e;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("catalog: bad line " + std::to_string(lineno) +
                                            " in " + de.path().string());
            std::string key = trim(line.substr(0, colon));
            std::string value = trim(line.substr(colon + 1));
            if (key == "id")
                e.id = value;
            else if (key == "kind")
                e.kind = value;
            else if (key == "def")
                e.def = value;
            else if (key == "note")
                e.note = value;
            else if (key.rfind("expect.", 0) == 0) {
                Expectation ex;
                std::vector<std::string> parts;
                std::stringstream ss(value);
                std::string part;
                while (std::getline(ss, part, '|')) parts.push_back(trim(part));
                ex.value = parts.empty() ? "" : parts[0];
                ex.provenance = parts.size() > 1 ? parts[1] : "derived";
                ex.note = parts.size() > 2 ? parts[2] : "";
                e.expect[key.substr(7)] = std::move(ex);
            } else if (key.rfind("depth.", 0) == 0 || key == "slow") {
                Expectation ex;
                ex.value = value;
                e.expect["_" + key] = std::move(ex);
            } else
                throw std::invalid_argument("catalog: unknown key '" + key + "' in " +
                                            de.path().string());
        }
        if (e.id.empty()) throw std::invalid_argument("catalog: entry without id in " +
                                                      de.path().string());
        entries_[e.id] = std::move(e);
    }
}

std::string Catalog::default_dir() { return SKEWGOR_DATA_DIR; }

std::vector<std::string> Catalog::ids() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

const CatalogEntry& Catalog::load(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw std::invalid_argument("catalog: unknown id '" + id + "'");
    return it->second;
}

TriVector Catalog::form(const CatalogEntry& e) const {
    if (e.kind != "trivector") throw std::invalid_argument("catalog: entry is not a trivector");
    return TriVector::parse(e.def);
}

AlgebraPresentation Catalog::presentation(const CatalogEntry& e) const {
    if (e.kind != "skew_presentation" && e.kind != "comm_presentation")
        throw std::invalid_argument("catalog: entry is not a presentation");
    return parse_presentation(e.def);
}

AlgebraPtr Catalog::ring(const CatalogEntry& e, int top) const {
    if (e.kind == "trivector") return macaulay_ring(form(e));
    if (e.kind == "skew_presentation" || e.kind == "comm_presentation")
        return presentation_algebra(presentation(e), top);
    if (e.kind == "extension") {
        AlgebraPtr base = ring(load(e.def), top);
        return trivial_extension(base, matlis_dual(base));
    }
    throw std::invalid_argument("catalog: unknown kind '" + e.kind + "'");
}

bool RunReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string RunReport::str() const {
    std::ostringstream os;
    os << id << ": " << (all_pass() ? "OK" : "MISMATCH") << "\n";
    for (const auto& c : checks)
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
           << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
    return os.str();
}

std::string RunReport::json() const {
    std::ostringstream os;
    os << "{\"id\": \"" << id << "\", \"pass\": " << (all_pass() ? "true" : "false")
       << ", \"checks\": [";
    for (size_t i = 0; i < checks.size(); ++i) {
        if (i) os << ",";
        os << "{\"name\": \"" << checks[i].name
           << "\", \"pass\": " << (checks[i].pass ? "true" : "false") << ", \"detail\": \""
           << checks[i].detail << "\"}";
    }
    os << "]}";
    return os.str();
}

namespace {

SeriesUni poly_series(const std::string& text, int D) {
    return SeriesUni::from_poly(parse_poly_z(text), D);
}

// expected Koszul verdict text: "true" or "false" or "false:i,j,dim"
void check_koszul(RunReport& rep, const std::string& name, const Expectation& ex,
                  const KoszulVerdict& v) {
    CheckResult c;
    c.name = name;
    bool expect_true = ex.value.rfind("true", 0) == 0;
    if (expect_true) {
        c.pass = v.koszul;
        c.detail = v.str();
    } else {
        c.pass = !v.koszul;
        c.detail = v.str();
        size_t colon = ex.value.find(':');
        if (c.pass && colon != std::string::npos) {
            int wi, wj;
            long wd;
            char comma;
            std::istringstream is(ex.value.substr(colon + 1));
            is >> wi >> comma >> wj >> comma >> wd;
            if (wi != v.witness_i || wj != v.witness_j || wd != v.witness_dim) {
                c.pass = false;
                c.detail += " (expected witness Tor_{" + std::to_string(wi) + "," +
                            std::to_string(wj) + "} = " + std::to_string(wd) + ")";
            }
        }
    }
    rep.checks.push_back(std::move(c));
}

void check_series_eq(RunReport& rep, const std::string& name, const SeriesUni& got,
                     const SeriesUni& want) {
    CheckResult c;
    c.name = name;
    int D = std::min(got.trunc(), want.trunc());
    c.pass = got.truncated(D) == want.truncated(D);
    if (!c.pass) c.detail = "got " + got.str() + ", want " + want.str();
    rep.checks.push_back(std::move(c));
}

void add_check(RunReport& rep, const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
}

template <typename F>
void guarded(RunReport& rep, const std::string& name, F&& f) {
    try {
        f();
    } catch (const std::domain_error& e) {
        add_check(rep, name, false, std::string("refused: ") + e.what());
    } catch (const std::exception& e) {
        add_check(rep, name, false, std::string("error: ") + e.what());
    }
}

}  // namespace

RunReport run_entry(const Catalog& cat, const std::string& id, const RunOptions& opt) {
    const CatalogEntry& e = cat.load(id);
    RunReport rep;
    rep.id = id;

    if (e.has("_slow") && e.get("_slow").value == "true" && opt.skip_slow) {
        add_check(rep, "skipped (slow entry)", true);
        return rep;
    }
    int D = opt.series_degree;
    if (e.has("_depth.series")) D = std::min(D, std::stoi(e.get("_depth.series").value));
    int gb_cap = std::max(D, opt.gb_cap >= 0 ? std::min(opt.gb_cap, D) : D);

    // the dual presentation used by series/Koszulness checks
    AlgebraPresentation dual;
    bool have_dual = false;
    AlgebraPtr ring;

    if (e.kind == "trivector") {
        TriVector F = cat.form(e);
        dual = koszul_dual_presentation(F);
        have_dual = true;
        guarded(rep, "hilbert_gorenstein", [&] {
            ring = macaulay_ring(F);
            if (e.has("hilbert_gorenstein"))
                check_series_eq(rep, "hilbert_gorenstein", ring->hilbert(6),
                                poly_series(e.get("hilbert_gorenstein").value, 6));
        });
        if (e.has("rank"))
            add_check(rep, "rank", trivector_rank(F) == std::stoi(e.get("rank").value),
                      "rank = " + std::to_string(trivector_rank(F)));
        if (e.has("hilbert_quadratic"))
            guarded(rep, "hilbert_quadratic", [&] {
                check_series_eq(rep, "hilbert_quadratic", quadratic_part_ring(F)->hilbert(6),
                                poly_series(e.get("hilbert_quadratic").value, 6));
            });
        if (e.has("cubic_corrections"))
            guarded(rep, "cubic_corrections", [&] {
                auto got = cubic_corrections(F);
                std::string want = e.get("cubic_corrections").value;
                if (want == "none") {
                    add_check(rep, "cubic_corrections", got.empty(),
                              got.empty() ? "" : "found " + std::to_string(got.size()));
                    return;
                }
                // span comparison modulo the quadratic ideal piece
                auto E = exterior_algebra(F.n());
                auto R = quadratic_part_ring(F);
                EchelonQ quad;
                for (const auto& row : R->ideal_basis(3)) quad.insert(row);
                EchelonQ span_got;
                int dim_got = 0;
                for (const auto& el : got)
                    if (span_got.insert(quad.reduce(E->coords(el)))) ++dim_got;
                bool ok = true;
                std::stringstream ss(want);
                std::string one;
                int nwant = 0;
                while (std::getline(ss, one, ';')) {
                    ++nwant;
                    TriVector t3 = TriVector::parse(one, F.n());
                    SVec red = quad.reduce(E->coords(t3.element()));
                    if (!span_got.reduce(red).empty()) ok = false;
                }
                ok = ok && (dim_got == nwant);
                add_check(rep, "cubic_corrections", ok,
                          "computed " + std::to_string(dim_got) + " corrections");
            });
        if (e.has("gorenstein"))
            guarded(rep, "gorenstein", [&] {
                add_check(rep, "gorenstein",
                          is_gorenstein(*ring) == (e.get("gorenstein").value == "true"));
            });
        if (e.has("roundtrip"))
            guarded(rep, "roundtrip", [&] {
                TriVector F2 = recover_form(*ring);
                auto R2 = macaulay_ring(F2);
                auto Rq = std::dynamic_pointer_cast<const QuotientAlgebra>(ring);
                auto R2q = std::dynamic_pointer_cast<const QuotientAlgebra>(R2);
                bool ok = true;
                for (int d = 1; d <= 3; ++d) {
                    if (Rq->ideal_dim(d) != R2q->ideal_dim(d)) ok = false;
                    EchelonQ ech;
                    for (const auto& r : Rq->ideal_basis(d)) ech.insert(r);
                    for (const auto& r : R2q->ideal_basis(d))
                        if (!ech.reduce(r).empty()) ok = false;
                }
                add_check(rep, "roundtrip", ok);
            });
        if (e.has("koszul_quadratic"))
            guarded(rep, "koszul_quadratic", [&] {
                check_koszul(rep, "koszul_quadratic", e.get("koszul_quadratic"),
                             koszulness_test(quadratic_part_ring(F), opt.koszul_h, -1,
                                             opt.threads));
            });
        if (e.has("koszul_gorenstein"))
            guarded(rep, "koszul_gorenstein", [&] {
                check_koszul(rep, "koszul_gorenstein", e.get("koszul_gorenstein"),
                             koszulness_test(ring, opt.koszul_h, -1, opt.threads));
            });
        if (e.has("poincare_reciprocal"))
            guarded(rep, "poincare_reciprocal", [&] {
                // printed two-variable polynomial 1/P on a small box
                int H = 4, J = 5;
                SeriesBi want = SeriesBi::parse_poly(e.get("poincare_reciprocal").value, H + 1,
                                                     J + 1)
                                    .truncated(H, J);
                SeriesBi got = poincare_series(ring, H, J).inverse();
                add_check(rep, "poincare_reciprocal", got == want,
                          got == want ? "" : "got " + got.str());
            });
        if (e.has("gb_complete_degree"))
            guarded(rep, "gb_complete_degree", [&] {
                GroebnerBasis G = presentation_gb(dual, 2 * std::stoi(
                                                            e.get("gb_complete_degree").value) +
                                                            2,
                                                  nullptr, opt.threads);
                bool ok = G.certificate() == GroebnerBasis::Certificate::complete &&
                          G.max_elem_degree() == std::stoi(e.get("gb_complete_degree").value);
                add_check(rep, "gb_complete_degree", ok,
                          std::string("certificate ") + G.certificate_str() + ", max degree " +
                              std::to_string(G.max_elem_degree()));
            });
    } else if (e.kind == "skew_presentation" || e.kind == "comm_presentation") {
        AlgebraPresentation pres = cat.presentation(e);
        dual = quadratic_dual(pres);
        have_dual = true;
        guarded(rep, "hilbert", [&] {
            ring = presentation_algebra(pres, 8);
            if (e.has("hilbert"))
                check_series_eq(rep, "hilbert", ring->hilbert(6),
                                poly_series(e.get("hilbert").value, 6));
        });
        if (e.has("gorenstein"))
            guarded(rep, "gorenstein", [&] {
                add_check(rep, "gorenstein",
                          is_gorenstein(*ring) == (e.get("gorenstein").value == "true"));
            });
        if (e.has("koszul"))
            guarded(rep, "koszul", [&] {
                check_koszul(rep, "koszul", e.get("koszul"),
                             koszulness_test(ring, opt.koszul_h, -1, opt.threads));
            });
        if (e.has("bogvad"))
            guarded(rep, "bogvad", [&] {
                FormulaReport fr = verify_bogvad(ring, opt.box_h, opt.box_j, id);
                const std::string& want = e.get("bogvad").value;
                if (want == "zero")
                    add_check(rep, "bogvad", fr.holds, fr.holds ? "" : fr.defect.str());
                else if (want == "nonzero")
                    add_check(rep, "bogvad", !fr.holds, "defect " + fr.defect.str());
                else {
                    SeriesBi quot = SeriesBi::parse_poly(want, opt.box_h, opt.box_j);
                    SeriesBi expect_defect = quot * poincare_series(ring, opt.box_h, opt.box_j);
                    add_check(rep, "bogvad", fr.defect == expect_defect,
                              "defect " + fr.defect.str());
                }
            });
    } else if (e.kind == "extension") {
        guarded(rep, "extension", [&] {
            AlgebraPtr base = cat.ring(cat.load(e.def), 8);
            GradedModule I = matlis_dual(base);
            AlgebraPtr G = trivial_extension(base, I);
            ring = G;
            if (e.has("extension_hilbert"))
                check_series_eq(rep, "extension_hilbert", G->hilbert(6),
                                poly_series(e.get("extension_hilbert").value, 6));
            if (e.has("gorenstein"))
                add_check(rep, "gorenstein",
                          is_gorenstein(*G) == (e.get("gorenstein").value == "true"));
            if (e.has("gulliksen")) {
                FormulaReport fr =
                    verify_gulliksen(base, I, G, opt.box_h, std::max(opt.box_j, 12), id);
                add_check(rep, "gulliksen", fr.holds, fr.holds ? "" : fr.defect.str());
            }
        });
    } else {
        add_check(rep, "kind", false, "unknown kind " + e.kind);
        return rep;
    }

    // dual-side checks shared by trivector and presentation entries
    if (have_dual) {
        if (e.has("dual_relations"))
            guarded(rep, "dual_relations", [&] {
                AlgebraPresentation printed = parse_presentation(e.get("dual_relations").value);
                add_check(rep, "dual_relations", quadratic_span_equal(dual, printed));
            });
        if (e.has("dual_reciprocal"))
            guarded(rep, "dual_reciprocal", [&] {
                SeriesUni got = hilbert_series_of_quotient(dual, D, nullptr, opt.threads);
                SeriesUni want =
                    poly_series("1", D) * poly_series(e.get("dual_reciprocal").value, D).inverse();
                check_series_eq(rep, "dual_reciprocal", got, want);
            });
        if (e.has("dual_rational"))
            guarded(rep, "dual_rational", [&] {
                // "num // den" as polynomial products in z
                std::string v = e.get("dual_rational").value;
                size_t slash = v.find("//");
                PolyZ num =
                    parse_poly_product(slash == std::string::npos ? "1" : trim(v.substr(0, slash)));
                PolyZ den = parse_poly_product(
                    trim(slash == std::string::npos ? v : v.substr(slash + 2)));
                SeriesUni got = hilbert_series_of_quotient(dual, D, nullptr, opt.threads);
                check_series_eq(rep, "dual_rational", got, expand_rational(num, den, D));
            });
        if (e.has("dual_product"))
            guarded(rep, "dual_product", [&] {
                ProductSpec spec = ProductSpec::parse(e.get("dual_product").value);
                SeriesUni got =
                    hilbert_series_of_quotient(dual, D, nullptr, opt.threads).inverse();
                check_series_eq(rep, "dual_product", got, expand_product(spec, D));
            });
        if (e.has("dual_prefix"))
            guarded(rep, "dual_prefix", [&] {
                std::vector<Scalar> want;
                std::stringstream ss(e.get("dual_prefix").value);
                std::string one;
                while (std::getline(ss, one, ',')) want.emplace_back(std::stol(trim(one)));
                int depth = std::min<int>(D, static_cast<int>(want.size()) - 1);
                SeriesUni got = hilbert_series_of_quotient(dual, depth, nullptr, opt.threads);
                want.resize(depth + 1);
                check_series_eq(rep, "dual_prefix", got, SeriesUni(want, depth));
            });
        if (e.has("series_identity"))
            guarded(rep, "series_identity", [&] {
                // "<poly> * dual" must multiply R!(z) to 1: the printed
                // closed form for 1/R!(z) scaled by an auxiliary polynomial
                PolyZ poly = parse_poly_z(e.get("series_identity").value);
                SeriesUni got = hilbert_series_of_quotient(dual, D, nullptr, opt.threads);
                SeriesUni prod = got * SeriesUni::from_poly(poly, D);
                check_series_eq(rep, "series_identity", prod, SeriesUni::one(D));
            });
        if (e.has("koszul_dual"))
            guarded(rep, "koszul_dual", [&] {
                int J = opt.koszul_h + 5;
                auto B = gb_algebra(dual, J + 1, J, nullptr, opt.threads);
                ResolveOptions ro;
                ro.H = opt.koszul_h;
                ro.J = J;
                ro.threads = opt.threads;
                ro.presented_quadratic = &dual.relations;
                KoszulVerdict v;
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
                check_koszul(rep, "koszul_dual", e.get("koszul_dual"), v);
            });
        if (e.has("tor3_pattern"))
            guarded(rep, "tor3_pattern", [&] {
                // "j:dim,j:dim,..." over the dual algebra
                std::map<int, long> want;
                std::stringstream ss(e.get("tor3_pattern").value);
                std::string one;
                int maxj = 0;
                while (std::getline(ss, one, ',')) {
                    size_t colon = one.find(':');
                    int j = std::stoi(trim(one.substr(0, colon)));
                    want[j] = std::stol(trim(one.substr(colon + 1)));
                    maxj = std::max(maxj, j);
                }
                auto B = gb_algebra(dual, maxj, maxj, nullptr, opt.threads);
                ResolveOptions ro;
                ro.H = 3;
                ro.J = maxj;
                ro.threads = opt.threads;
                ro.presented_quadratic = &dual.relations;
                BigradedTable T = minimal_resolution(B, ro).table;
                bool ok = true;
                std::string got;
                for (auto& [j, dim] : want) {
                    got += (got.empty() ? "" : ",") + std::to_string(j) + ":" +
                           std::to_string(T.at(3, j));
                    if (T.at(3, j) != dim) ok = false;
                }
                add_check(rep, "tor3_pattern", ok, got);
            });
        if (e.has("lofwall") && ring)
            guarded(rep, "lofwall", [&] {
                int need = std::min(opt.box_h + 1, opt.box_j);
                SeriesUni ds = hilbert_series_of_quotient(dual, need, nullptr, opt.threads);
                FormulaReport fr = verify_lofwall(ring, ds, opt.box_h, opt.box_j, id);
                add_check(rep, "lofwall", fr.holds, fr.holds ? "" : fr.defect.str());
            });
    }
    return rep;
}

}  // namespace skewgor
