/// Command line front end: builds idempotents, runs verification suites,
/// computes hom-space dimensions and fullness reports, and evaluates
/// expression-language morphisms to exact matrices.
///
/// Exit codes: 0 success / all checks passed, 1 a checked identity is
/// false, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "smalltl/errors.hpp"
#include "smalltl/extended.hpp"
#include "smalltl/functor.hpp"
#include "smalltl/jw.hpp"
#include "smalltl/tangles.hpp"
#include "smalltl/uq.hpp"
#include "smalltl/verify.hpp"

namespace {

using namespace smalltl;
using nlohmann::json;

void emit(const std::string& out_path, const std::string& text) {
    std::string body = text;
    if (body.empty() || body.back() != '\n') body += '\n';
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw ParseError("cannot open output file: " + out_path);
    os << body;
}

struct IdemOpts {
    int r = 3;
    std::string ring = "root";
    std::string format = "text";
    std::string out;
    std::string kind;
    int m = 0;
};

void run_idempotent(const IdemOpts& o) {
    RingTag tag = o.ring == "generic" ? RingTag::generic() : RingTag::root(o.r);
    TLMorphism v = [&] {
        if (o.kind == "f") return build_f(o.m, tag);
        if (o.kind == "g") return build_g(o.m, o.r, tag);
        if (o.kind == "h") return build_h(o.m, o.r, tag);
        if (o.kind == "p") return build_p(o.m, o.r, tag);
        return build_i(o.m, o.r, tag);
    }();
    if (o.format == "json") {
        json j;
        j["key"] = o.kind + ":" + std::to_string(o.m);
        j["r"] = o.r;
        j["ring"] = o.ring;
        j["bottom"] = v.bottom();
        j["top"] = v.top();
        json terms = json::array();
        for (const auto& [t, c] : v.terms())
            terms.push_back(json::array({t.to_string(), c.to_string()}));
        j["terms"] = std::move(terms);
        emit(o.out, j.dump(2));
        return;
    }
    std::ostringstream body;
    body << o.kind << ":" << o.m << "  (" << v.bottom() << " -> " << v.top()
         << " strands, ring " << tag.to_string() << ", " << v.term_count()
         << " diagram terms)\n";
    for (const auto& [t, c] : v.terms())
        body << "  " << c.to_string() << "  *  " << t.to_string() << "\n";
    emit(o.out, body.str());
}

struct VerifyOpts {
    int r = 3;
    std::string suite = "all";
    unsigned seed = 20240229;
    std::string format = "text";
    std::string out;
};

int run_verify(const VerifyOpts& o) {
    CheckList checks = run_suite(o.suite, o.r, o.seed);
    long failed = 0;
    for (const auto& [label, ok] : checks)
        if (!ok) ++failed;
    if (o.format == "json") {
        json j;
        j["r"] = o.r;
        j["suite"] = o.suite;
        j["seed"] = o.seed;
        json arr = json::array();
        for (const auto& [label, ok] : checks)
            arr.push_back(json{{"label", label}, {"ok", ok}});
        j["checks"] = std::move(arr);
        j["passed"] = static_cast<long>(checks.size()) - failed;
        j["failed"] = failed;
        emit(o.out, j.dump(2));
    } else {
        std::ostringstream body;
        for (const auto& [label, ok] : checks)
            body << (ok ? "  ok  " : "FAIL  ") << label << "\n";
        body << checks.size() - failed << "/" << checks.size() << " passed (suite "
             << o.suite << ", r = " << o.r << ")\n";
        emit(o.out, body.str());
    }
    return failed == 0 ? 0 : 1;
}

struct HomOpts {
    int r = 3;
    int m = 0, mp = 0;
    std::string format = "text";
    std::string out;
};

void run_hom(const HomOpts& o) {
    if (o.m < 0 || o.mp < 0) throw IndexOutOfRange("hom: strand counts must be >= 0");
    BasedModule a = tensor_power(o.m, o.r);
    BasedModule b = tensor_power(o.mp, o.r);
    long dim = static_cast<long>(hom_space(a, b).size());
    if (o.format == "json") {
        json j{{"r", o.r}, {"m", o.m}, {"mp", o.mp}, {"dimension", dim}};
        emit(o.out, j.dump(2));
    } else {
        emit(o.out, "dimension " + std::to_string(dim));
    }
}

struct FullOpts {
    int r = 3;
    int m = 0, mp = 0;
    long budget = 0;
    std::string format = "text";
    std::string out;
};

int run_fullness(const FullOpts& o) {
    FullnessReport rep = fullness_check(o.m, o.mp, o.r, o.budget);
    std::string verdict = rep.full()
                              ? "FULL"
                              : (rep.budget_exhausted ? "INCONCLUSIVE (budget exhausted)"
                                                      : "NOT FULL");
    if (o.format == "json") {
        json j{{"r", rep.r},
               {"m", rep.m},
               {"mp", rep.mp},
               {"hom_dim", rep.hom_dim},
               {"tangle_rank", rep.tangle_rank},
               {"extended_rank", rep.extended_rank},
               {"words_tried", rep.words_tried},
               {"budget_exhausted", rep.budget_exhausted},
               {"full", rep.full()},
               {"verdict", verdict}};
        emit(o.out, j.dump(2));
    } else {
        std::ostringstream body;
        body << "hom dimension    : " << rep.hom_dim << "\n"
             << "tangle rank      : " << rep.tangle_rank << "\n"
             << "extended rank    : " << rep.extended_rank << "\n"
             << "words tried      : " << rep.words_tried << "\n"
             << "budget exhausted : " << (rep.budget_exhausted ? "yes" : "no") << "\n"
             << "verdict          : " << verdict << "\n";
        emit(o.out, body.str());
    }
    if (!rep.full() && !rep.budget_exhausted) return 1;
    return 0;
}

struct EvalOpts {
    int r = 3;
    std::string expr;
    bool trace = false;
    std::string format = "text";
    std::string out;
};

void trace_leaves(const ExtMorphism& em, std::ostringstream& os) {
    switch (em.kind()) {
        case ExtMorphism::Kind::Compose:
        case ExtMorphism::Kind::Tensor:
            trace_leaves(em.second(), os);
            trace_leaves(em.first(), os);
            return;
        case ExtMorphism::Kind::TL:
            for (const auto& [t, c] : em.tl_payload().terms()) {
                Tangle::Decomposition d = t.decompose();
                os << "  " << t.to_string() << "\n    caps:";
                for (auto [i, j] : d.caps) os << " (" << i << "," << j << ")";
                os << "\n    cups:";
                for (auto [i, j] : d.cups) os << " (" << i << "," << j << ")";
                os << "\n    through:";
                for (auto [b, t2] : d.through) os << " (" << b << "->" << t2 << ")";
                os << "\n";
            }
            return;
        default:
            return;
    }
}

void run_eval(const EvalOpts& o) {
    ExtMorphism em = ExtMorphism::parse(o.expr, o.r);
    FunctorContext ctx(o.r);
    SparseMat img = em.image(ctx);
    if (o.format == "json") {
        json j;
        j["r"] = o.r;
        j["expr"] = o.expr;
        j["text"] = em.to_text();
        j["tree"] = json::parse(em.to_json());
        j["bottom"] = em.bottom();
        j["top"] = em.top();
        j["rows"] = img.rows();
        j["cols"] = img.cols();
        json entries = json::array();
        for (int c = 0; c < img.cols(); ++c)
            for (const auto& [row, v] : img.column(c))
                entries.push_back(json::array({row, c, v.to_string()}));
        j["entries"] = std::move(entries);
        emit(o.out, j.dump(2));
        return;
    }
    std::ostringstream body;
    body << "expr  : " << em.to_text() << "\n"
         << "shape : " << em.bottom() << " -> " << em.top() << " strands ("
         << img.rows() << " x " << img.cols() << " matrix, " << img.nnz()
         << " nonzero)\n";
    if (o.trace) {
        body << "diagram layers:\n";
        trace_leaves(em, body);
    }
    for (int c = 0; c < img.cols(); ++c)
        for (const auto& [row, v] : img.column(c))
            body << "  (" << row << ", " << c << ") = " << v.to_string() << "\n";
    emit(o.out, body.str());
}

void add_common(CLI::App* cmd, int& r, std::string& format, std::string& out) {
    cmd->add_option("--r", r, "level, an odd integer >= 3")->capture_default_str();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out, "write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact diagram calculus for small quantum sl2 at odd roots of unity"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto idem = std::make_shared<IdemOpts>();
    CLI::App* c1 = app.add_subcommand(
        "idempotent", "Build one of the idempotents f, g, h or the pair p, i");
    add_common(c1, idem->r, idem->format, idem->out);
    c1->add_option("--ring", idem->ring, "coefficient ring")
        ->check(CLI::IsMember({"generic", "root"}))
        ->capture_default_str();
    c1->add_option("kind", idem->kind, "f, g, h, p or i")
        ->required()
        ->check(CLI::IsMember({"f", "g", "h", "p", "i"}));
    c1->add_option("m", idem->m, "strand index")->required();
    c1->callback([idem] { run_idempotent(*idem); });

    auto ver = std::make_shared<VerifyOpts>();
    CLI::App* c2 = app.add_subcommand("verify", "Run a named verification suite");
    add_common(c2, ver->r, ver->format, ver->out);
    c2->add_option("--suite", ver->suite, "scalars, tangles, jw-generic, jw-root, uq, appendix, functor, extended or all")
        ->capture_default_str();
    c2->add_option("--seed", ver->seed, "seed for randomized samples")->capture_default_str();
    c2->callback([ver, &exit_code] { exit_code = run_verify(*ver); });

    auto hom = std::make_shared<HomOpts>();
    CLI::App* c3 = app.add_subcommand(
        "hom", "Dimension of the intertwiner space between tensor powers");
    add_common(c3, hom->r, hom->format, hom->out);
    c3->add_option("m", hom->m, "source strand count")->required();
    c3->add_option("mp", hom->mp, "target strand count")->required();
    c3->callback([hom] { run_hom(*hom); });

    auto ful = std::make_shared<FullOpts>();
    CLI::App* c4 = app.add_subcommand(
        "fullness", "Compare word image ranks against the intertwiner dimension");
    add_common(c4, ful->r, ful->format, ful->out);
    c4->add_option("--budget", ful->budget, "maximum number of extended words (0 = no cap)")
        ->capture_default_str();
    c4->add_option("m", ful->m, "source strand count")->required();
    c4->add_option("mp", ful->mp, "target strand count")->required();
    c4->callback([ful, &exit_code] { exit_code = run_fullness(*ful); });

    auto ev = std::make_shared<EvalOpts>();
    CLI::App* c5 = app.add_subcommand(
        "eval", "Evaluate an expression to its exact matrix");
    add_common(c5, ev->r, ev->format, ev->out);
    c5->add_flag("--trace", ev->trace, "print the planar decomposition of every diagram leaf");
    c5->add_option("expr", ev->expr,
                   "expression: p+, p-, i+, i-, f:m, g:m, h:m, id:n, tangle "
                   "literals, ';' composes bottom to top, '*' tensors")
        ->required();
    c5->callback([ev] { run_eval(*ev); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
