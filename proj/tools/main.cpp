#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewlines/canon.hpp"
#include "skewlines/detect.hpp"
#include "skewlines/enumerate.hpp"
#include "skewlines/euler.hpp"
#include "skewlines/family.hpp"
#include "skewlines/linking.hpp"
#include "skewlines/surface.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw skew::parse_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

skew::LinkMatrix read_matrix(const std::string& path) {
    return skew::parse_matrix(slurp(path));
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

json matrix_json(const skew::LinkMatrix& X) {
    json rows = json::array();
    for (int i = 0; i < X.n; ++i) {
        json row = json::array();
        for (int j = 0; j < X.n; ++j) row.push_back(X.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

json perm_json(const skew::Perm& p) {
    json out = json::array();
    for (int i = 1; i <= p.n(); ++i) out.push_back(p(i));
    return out;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"skew line configurations: linking matrices, switching classes, "
                 "spindle detection, genus and enumeration"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    std::vector<std::string> perm_args;
    std::string matrix_arg, matrix_arg2;
    int int_arg = 0;

    auto* lk = app.add_subcommand("lk", "linking matrix of a spindle permutation");
    lk->add_option("perm", perm_args, "permutation images, e.g. 1 4 2 5 3")->required();

    auto* canon_cmd = app.add_subcommand("canon", "canonical switching-class key");
    canon_cmd->add_option("matrix", matrix_arg, "matrix file or - for stdin")->required();

    auto* equiv = app.add_subcommand("equiv", "switching equivalence of two matrices");
    equiv->add_option("first", matrix_arg, "matrix file or -")->required();
    equiv->add_option("second", matrix_arg2, "matrix file or -")->required();

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial det(tI - X)");
    charpoly->add_option("matrix", matrix_arg, "matrix file or -")->required();

    auto* chir = app.add_subcommand("chirality", "triple linking counts (gamma+, gamma-)");
    chir->add_option("matrix", matrix_arg, "matrix file or -")->required();

    auto* sig = app.add_subcommand("signature", "odd-order signature (product of upper entries)");
    sig->add_option("matrix", matrix_arg, "matrix file or -")->required();

    auto* eo = app.add_subcommand("euler-orient", "Eulerian representative of an odd class");
    eo->add_option("matrix", matrix_arg, "matrix file or -")->required();

    auto* et = app.add_subcommand("euler-tree", "Euler tree of an even-order matrix");
    et->add_option("matrix", matrix_arg, "matrix file or -")->required();

    auto* series = app.add_subcommand("series", "Euler-tree counting series");
    series->add_option("N", int_arg, "last coefficient index")->required();

    auto* detect_cmd = app.add_subcommand("detect", "search a spindle structure");
    detect_cmd->add_option("matrix", matrix_arg, "matrix file or -")->required();

    auto* genus = app.add_subcommand("genus", "glue two polygons along a signed permutation");
    genus->add_option("perm", perm_args, "images, signs optional, e.g. -2 3 1")->required();

    auto* gt = app.add_subcommand("genus-table", "genus histogram over normalized permutations");
    gt->add_option("n", int_arg, "order")->required();
    bool gt_extended = false;
    int gt_workers = 0;
    gt->add_flag("--extended", gt_extended, "unlock large orders");
    gt->add_option("--workers", gt_workers, "worker threads");

    auto* vp = app.add_subcommand("vpoly", "V-polynomial over all signings");
    vp->add_option("perm", perm_args, "permutation images")->required();

    auto* wit = app.add_subcommand("witness", "isotopy family between equivalent spindles");
    std::string wit_sigma, wit_mu;
    wit->add_option("sigma", wit_sigma, "first permutation, quoted")->required();
    wit->add_option("mu", wit_mu, "second permutation, quoted")->required();

    auto* en = app.add_subcommand("enumerate", "enumeration reports (always JSON)");
    int en_spindles = 0, en_switching = 0, en_charpolys = 0, en_genus = 0, en_census = 0;
    en->add_option("--spindles", en_spindles, "spindle classes of order n");
    en->add_option("--switching", en_switching, "switching classes of order n");
    en->add_option("--charpolys", en_charpolys, "distinct characteristic polynomials");
    en->add_option("--genus", en_genus, "genus histogram of order n");
    en->add_option("--census", en_census, "spindle census over switching classes");
    bool en_extended = false;
    int en_workers = 0;
    std::string en_checkpoint;
    en->add_flag("--extended", en_extended, "unlock large orders");
    en->add_option("--workers", en_workers, "worker threads");
    en->add_option("--checkpoint-dir", en_checkpoint, "resumable shard files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (lk->parsed()) {
        skew::Perm p = skew::parse_perm(join(perm_args));
        skew::LinkMatrix X = skew::from_spindle(p);
        if (as_json)
            emit({{"n", X.n}, {"matrix", matrix_json(X)}});
        else
            std::cout << skew::to_string(X);
    } else if (canon_cmd->parsed()) {
        skew::CanonKey k = skew::canon(read_matrix(matrix_arg));
        if (as_json)
            emit({{"n", k.n}, {"key", k.hex()}});
        else
            std::cout << k.hex() << '\n';
    } else if (equiv->parsed()) {
        bool eq = skew::equivalent(read_matrix(matrix_arg), read_matrix(matrix_arg2));
        if (as_json)
            emit({{"equivalent", eq}});
        else
            std::cout << (eq ? "equivalent" : "not equivalent") << '\n';
        if (!eq) return 1;
    } else if (charpoly->parsed()) {
        skew::CharPoly p = skew::char_poly(read_matrix(matrix_arg));
        if (as_json)
            emit({{"coeffs_ascending", p.coeffs}});
        else
            std::cout << skew::to_string(p) << '\n';
    } else if (chir->parsed()) {
        skew::Chirality c = skew::chirality(read_matrix(matrix_arg));
        if (as_json)
            emit({{"gamma_plus", c.gamma_plus}, {"gamma_minus", c.gamma_minus}, {"c", c.c()}});
        else
            std::cout << "gamma_plus=" << c.gamma_plus << " gamma_minus=" << c.gamma_minus
                      << " c=" << c.c() << '\n';
    } else if (sig->parsed()) {
        int s = skew::odd_signature(read_matrix(matrix_arg));
        if (as_json)
            emit({{"signature", s}});
        else
            std::cout << (s > 0 ? "+1" : "-1") << '\n';
    } else if (eo->parsed()) {
        skew::EulerOrientation o = skew::euler_orient(read_matrix(matrix_arg));
        if (as_json) {
            emit({{"matrix", matrix_json(o.matrix)}, {"flips", o.flips}});
        } else {
            std::cout << skew::to_string(o.matrix) << "flips:";
            for (int v : o.flips) std::cout << ' ' << v;
            std::cout << '\n';
        }
    } else if (et->parsed()) {
        skew::EulerTree t = skew::euler_tree(read_matrix(matrix_arg));
        if (as_json)
            emit({{"n", t.n}, {"tree", skew::to_string(t)}});
        else
            std::cout << skew::to_string(t) << '\n';
    } else if (series->parsed()) {
        skew::SeriesTable st = skew::tree_series(int_arg);
        if (as_json) {
            json a = json::array(), b = json::array();
            for (const auto& v : st.alpha) a.push_back(v.str());
            for (const auto& v : st.beta) b.push_back(v.str());
            emit({{"alpha", a}, {"beta", b}});
        } else {
            std::cout << "alpha:";
            for (const auto& v : st.alpha) std::cout << ' ' << v.str();
            std::cout << "\nbeta:";
            for (const auto& v : st.beta) std::cout << ' ' << v.str();
            std::cout << '\n';
        }
    } else if (detect_cmd->parsed()) {
        skew::DetectResult r = skew::detect(read_matrix(matrix_arg));
        if (as_json) {
            if (r.found)
                emit({{"found", true},
                      {"sigma", perm_json(r.sigma)},
                      {"gamma", perm_json(r.gamma)},
                      {"nodes", r.nodes}});
            else
                emit({{"found", false}, {"nodes", r.nodes}});
        } else if (r.found) {
            std::cout << "FOUND sigma=" << skew::to_string(r.sigma)
                      << " gamma=" << skew::to_string(r.gamma) << '\n';
        } else {
            std::cout << skew::no_spindle_message << '\n';
        }
        if (!r.found) return 1;
    } else if (genus->parsed()) {
        skew::SignedPerm sp = skew::parse_signed_perm(join(perm_args));
        skew::GluedSurface s = skew::glue(sp);
        if (as_json) {
            json out = {{"n", s.n},
                        {"v", s.v},
                        {"euler_char", s.euler_char},
                        {"orientable", s.orientable}};
            out[s.orientable ? "genus" : "crosscaps"] = s.genus;
            emit(out);
        } else {
            std::cout << "v=" << s.v << " euler_char=" << s.euler_char << " orientable="
                      << (s.orientable ? "yes" : "no")
                      << (s.orientable ? " genus=" : " crosscaps=") << s.genus << '\n';
        }
    } else if (gt->parsed()) {
        skew::EnumerateOptions opt;
        opt.extended = gt_extended;
        opt.workers = gt_workers;
        auto hist = skew::genus_histogram(int_arg, opt);
        if (as_json) {
            json h = json::object();
            for (auto& [g, c] : hist) h[std::to_string(g)] = c;
            emit({{"n", int_arg}, {"histogram", h}});
        } else {
            for (auto& [g, c] : hist) std::cout << g << ' ' << c << '\n';
        }
    } else if (vp->parsed()) {
        skew::VPoly v = skew::v_polynomial(skew::parse_perm(join(perm_args)));
        if (as_json) {
            json terms = json::array();
            for (auto& [key, count] : v.terms)
                terms.push_back({{"t", key.first}, {"z", key.second}, {"count", count}});
            emit({{"n", v.n}, {"terms", terms}});
        } else {
            std::cout << skew::to_string(v) << '\n';
        }
    } else if (wit->parsed()) {
        skew::LineFamily f =
            skew::build_family(skew::parse_perm(wit_sigma), skew::parse_perm(wit_mu));
        skew::SkewCertificate cert = skew::certify_skew(f);
        if (as_json) {
            json pairs = json::array();
            for (auto& pc : cert.pairs)
                pairs.push_back(
                    {{"i", pc.i}, {"j", pc.j}, {"A", pc.A}, {"B", pc.B}, {"disc", pc.disc}});
            emit({{"sigma", perm_json(f.sigma)},
                  {"mu", perm_json(f.mu)},
                  {"corr", perm_json(f.corr)},
                  {"pass", cert.pass},
                  {"pairs", pairs}});
        } else {
            std::cout << "sigma: " << skew::to_string(f.sigma) << '\n'
                      << "mu: " << skew::to_string(f.mu) << '\n'
                      << "corr: " << skew::to_string(f.corr) << '\n'
                      << "pass: " << (cert.pass ? "yes" : "no") << '\n'
                      << "pairs: " << cert.pairs.size() << '\n';
        }
    } else if (en->parsed()) {
        if (!en_spindles && !en_switching && !en_charpolys && !en_genus && !en_census) {
            std::cerr << "enumerate: pick at least one of --spindles --switching "
                         "--charpolys --genus --census\n";
            return 2;
        }
        skew::EnumerateOptions opt;
        opt.extended = en_extended;
        opt.workers = en_workers;
        opt.checkpoint_dir = en_checkpoint;
        json out = json::object();
        if (en_spindles) {
            skew::CountReport r = skew::count_spindle_classes(en_spindles, opt);
            out["spindles"] = {{"n", r.n},
                               {"classes", r.spindle_classes},
                               {"amphicheiral", r.amphicheiral},
                               {"runtime_seconds", r.runtime_seconds}};
        }
        if (en_switching)
            out["switching"] = {{"n", en_switching},
                                {"classes", skew::count_switching_classes(en_switching)}};
        if (en_charpolys)
            out["charpolys"] = {{"n", en_charpolys},
                                {"count", skew::count_charpolys(en_charpolys, opt)}};
        if (en_genus) {
            json h = json::object();
            for (auto& [g, c] : skew::genus_histogram(en_genus, opt))
                h[std::to_string(g)] = c;
            out["genus"] = {{"n", en_genus}, {"histogram", h}};
        }
        if (en_census) {
            skew::CensusResult c = skew::spindle_structure_census(en_census, opt);
            out["census"] = {{"n", en_census},
                            {"with_spindle", c.with_spindle},
                            {"without", c.without}};
        }
        emit(out);
    }
    return 0;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const skew::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const skew::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
