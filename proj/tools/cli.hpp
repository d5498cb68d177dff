#pragma once

/// \file cli.hpp
/// The `malcev` command line: argument parsing, object resolution, checks and
/// reports. `run` is callable in-process so tests can drive it directly.

#include "malcev/differential.hpp"
#include "malcev/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef MALCEV_FIXTURE_DIR
#define MALCEV_FIXTURE_DIR "fixtures"
#endif

namespace malcev::cli {

namespace fs = std::filesystem;
using io::json;

enum Exit : int { ok = 0, math_false = 1, usage = 2 };

// ---------------------------------------------------------------------------
// Reports.

struct Verdict {
    std::string name;
    bool holds = true;
    bool expected = true;
    std::string witness;
    std::string note;

    bool ok() const { return holds == expected; }
};

/// Renders a witness residual against the basis it lives in.
inline std::string render_witness(const Witness& w, const std::vector<std::string>& names)
{
    std::string residual;
    if (w.residual.cols() == 1 && w.residual.rows() == names.size() && !names.empty())
        residual = render_combination(w.residual.col(0), names);
    else if (w.residual.rows() == 1 && w.residual.cols() == 1)
        residual = w.residual(0, 0).render();
    else
        residual = render_matrix(w.residual);
    return w.arguments.empty() ? residual : w.arguments + " -> " + residual;
}

inline Verdict verdict(const CheckResult& c, const std::vector<std::string>& names, bool expected = true)
{
    Verdict v{c.name, c.holds, expected, {}, c.note};
    if (c.witness)
        v.witness = render_witness(*c.witness, names);
    return v;
}

struct Report {
    std::vector<std::string> command;
    std::vector<Verdict> checks;
    std::vector<std::string> info;
    std::vector<std::string> outputs;
    std::string error;
    std::optional<json> object; // constructed object when the report itself goes to stdout
    int exit_code = Exit::ok;

    void add(Verdict v) { checks.push_back(std::move(v)); }

    void add(const AxiomReport& r, const std::vector<std::string>& names)
    {
        for (const auto& c : r.checks)
            add(verdict(c, names));
    }

    void settle()
    {
        if (!error.empty())
            return;
        exit_code = Exit::ok;
        for (const auto& c : checks)
            if (!c.ok())
                exit_code = Exit::math_false;
    }

    json to_json() const
    {
        json doc;
        doc["format"] = 1;
        doc["command"] = command;
        json cs = json::array();
        for (const auto& c : checks) {
            json j;
            j["name"] = c.name;
            j["holds"] = c.holds;
            j["expected"] = c.expected;
            j["witness"] = c.witness.empty() ? json(nullptr) : json(c.witness);
            if (!c.note.empty())
                j["note"] = c.note;
            cs.push_back(std::move(j));
        }
        doc["checks"] = std::move(cs);
        doc["info"] = info;
        doc["outputs"] = outputs;
        if (object)
            doc["object"] = *object;
        if (!error.empty())
            doc["error"] = error;
        doc["exit_code"] = exit_code;
        return doc;
    }

    void print(std::ostream& os) const
    {
        for (const auto& c : checks) {
            os << (c.ok() ? "ok    " : "FAIL  ") << c.name << ": ";
            if (c.holds)
                os << (c.expected ? "holds" : "holds, but was expected to fail");
            else
                os << (c.expected ? "fails" : "fails as expected");
            if (!c.witness.empty())
                os << "; witness " << c.witness;
            if (!c.note.empty())
                os << " [" << c.note << "]";
            os << "\n";
        }
        for (const auto& line : info)
            os << line << "\n";
        for (const auto& path : outputs)
            os << "wrote " << path << "\n";
        if (!error.empty())
            os << "error: " << error << "\n";
    }
};

// ---------------------------------------------------------------------------
// Resolution of algebras, representations, bimodules, maps, tensors and forms
// from paths, fixture names and keywords.

class Loader {
public:
    Loader(fs::path fixtures, std::size_t max_dim) : fixtures_(std::move(fixtures)), max_dim_(max_dim) {}

    /// A path as given, relative to `base`, or a fixture name with or without its suffix.
    fs::path locate(const std::string& ref, const std::string& suffix, const fs::path& base = {}) const
    {
        std::vector<fs::path> candidates{fs::path(ref)};
        if (!base.empty())
            candidates.push_back(base / ref);
        candidates.push_back(fixtures_ / ref);
        candidates.push_back(fixtures_ / (ref + suffix));
        for (const auto& p : candidates) {
            std::error_code ec;
            if (fs::is_regular_file(p, ec))
                return p;
        }
        throw input_error("cannot find '" + ref + "' (looked in the working directory and " + fixtures_.string() +
                          ")");
    }

    StructureTable algebra(const std::string& ref, const fs::path& base = {}) const
    {
        fs::path p = locate(ref, ".alg.json", base);
        return checked(io::algebra_from_json(io::read_json(p), p.string()));
    }

    /// The algebra named by --algebra, else the document's own "algebra" field.
    StructureTable algebra_for(const json& doc, const fs::path& file, const std::optional<std::string>& explicit_ref,
                               const std::string& what) const
    {
        if (explicit_ref)
            return algebra(*explicit_ref);
        auto it = doc.find("algebra");
        if (it == doc.end())
            throw input_error(what + " '" + file.string() + "' names no algebra; pass --algebra");
        if (it->is_string())
            return algebra(it->get<std::string>(), file.parent_path());
        return checked(io::algebra_from_json(*it, file.string() + "/algebra"));
    }

    LinearRep rep(const std::string& ref, const std::optional<std::string>& algebra_ref) const
    {
        if (ref == "adjoint" || ref == "coadjoint") {
            StructureTable A = algebra(require(algebra_ref, "the " + ref + " representation"));
            return ref == "adjoint" ? adjoint_rep(A) : coadjoint_rep(A);
        }
        fs::path p = locate(ref, ".rep.json");
        json doc = io::read_json(p);
        LinearRep R = io::rep_from_json(doc, algebra_for(doc, p, algebra_ref, "representation"), p.string());
        limit(R.space_dim(), "representation space");
        return R;
    }

    Bimodule bimodule(const std::string& ref, const std::optional<std::string>& algebra_ref) const
    {
        static const std::vector<std::string> keywords{"regular", "dual-regular", "L0", "dual-L0", "dual-difference"};
        if (std::find(keywords.begin(), keywords.end(), ref) != keywords.end()) {
            StructureTable A = algebra(require(algebra_ref, "the " + ref + " bimodule"));
            if (ref == "regular")
                return regular_bimodule(A);
            if (ref == "dual-regular")
                return dual_bimodule(regular_bimodule(A));
            if (ref == "L0")
                return left_regular_bimodule(A);
            if (ref == "dual-L0")
                return dual_bimodule(left_regular_bimodule(A));
            return dual_difference_bimodule(A);
        }
        fs::path p = locate(ref, ".bimod.json");
        json doc = io::read_json(p);
        Bimodule B = io::bimodule_from_json(doc, algebra_for(doc, p, algebra_ref, "bimodule"), p.string());
        limit(B.space_dim(), "bimodule space");
        return B;
    }

    /// A map file, or "identity" / "zero" for the given shape.
    LinearMap map(const std::string& ref, std::size_t rows, std::size_t cols) const
    {
        if (ref == "identity") {
            if (rows != cols)
                throw input_error("the identity map needs a module of the algebra's dimension");
            return Matrix::identity(rows);
        }
        if (ref == "zero")
            return Matrix(rows, cols);
        fs::path p = locate(ref, ".map.json");
        LinearMap T = io::map_from_json(io::read_json(p), p.string());
        limit(T.rows(), "map target");
        limit(T.cols(), "map source");
        return T;
    }

    TwoTensor tensor(const std::string& ref, const std::optional<std::string>& algebra_ref) const
    {
        fs::path p = locate(ref, ".r.json");
        json doc = io::read_json(p);
        return io::tensor_from_json(doc, algebra_for(doc, p, algebra_ref, "tensor"), p.string());
    }

    BilinearForm form(const std::string& ref, const std::optional<std::string>& algebra_ref) const
    {
        fs::path p = locate(ref, ".form.json");
        json doc = io::read_json(p);
        return io::form_from_json(doc, algebra_for(doc, p, algebra_ref, "form"), p.string());
    }

    /// A mask file (nonzero entries are free) or a pattern such as "0001/0001/0001/1111".
    std::vector<std::vector<bool>> mask(const std::string& ref, std::size_t rows, std::size_t cols) const
    {
        std::vector<std::vector<bool>> out;
        bool pattern = !ref.empty() && ref.find_first_not_of("01*/;") == std::string::npos;
        if (pattern) {
            std::vector<bool> row;
            for (char ch : ref + "/") {
                if (ch == '/' || ch == ';') {
                    out.push_back(row);
                    row.clear();
                } else {
                    row.push_back(ch != '0');
                }
            }
        } else {
            LinearMap M = map(ref, rows, cols);
            out.assign(M.rows(), std::vector<bool>(M.cols()));
            for (std::size_t i = 0; i < M.rows(); ++i)
                for (std::size_t j = 0; j < M.cols(); ++j)
                    out[i][j] = !M(i, j).is_zero();
        }
        if (out.size() != rows)
            throw input_error("mask has " + std::to_string(out.size()) + " rows, expected " + std::to_string(rows));
        for (const auto& r : out)
            if (r.size() != cols)
                throw input_error("mask rows must have " + std::to_string(cols) + " entries");
        return out;
    }

private:
    StructureTable checked(StructureTable A) const
    {
        limit(A.dim(), "algebra");
        return A;
    }

    void limit(std::size_t n, const std::string& what) const
    {
        if (n > max_dim_)
            throw input_error(what + " dimension " + std::to_string(n) + " exceeds --max-dim " +
                              std::to_string(max_dim_));
    }

    static const std::string& require(const std::optional<std::string>& ref, const std::string& what)
    {
        if (!ref)
            throw input_error(what + " needs --algebra");
        return *ref;
    }

    fs::path fixtures_;
    std::size_t max_dim_;
};

// ---------------------------------------------------------------------------
// Output documents: representations and bimodules carry their algebra inline.

inline json rep_document(const LinearRep& R)
{
    json doc = io::rep_to_json(R);
    doc["algebra"] = io::algebra_to_json(R.algebra);
    return doc;
}

inline json bimodule_document(const Bimodule& B)
{
    json doc = io::bimodule_to_json(B);
    doc["algebra"] = io::algebra_to_json(B.algebra);
    return doc;
}

// ---------------------------------------------------------------------------
// Commands.

struct Args {
    // global
    bool oracle = false;
    std::string json_path;
    std::size_t max_dim = 64;
    std::string fixtures;
    // shared
    std::string input;
    std::optional<std::string> algebra, rep, rep2, bimodule, map, tensor, form;
    std::string output;
    // verify algebra
    bool anticommutative = false, malcev = false, sagle = false, jacobi = false, pre_malcev = false;
    bool no_anticommutative = false, no_malcev = false, no_sagle = false, no_jacobi = false, no_pre_malcev = false;
    // verify form
    bool invariant = false, cyclic = false, symplectic = false;
    // equivalence
    int variant = 0;
    // search
    std::string values = "-1,0,1";
    std::string mask;
    std::size_t budget = 1'000'000;
};

class Session {
public:
    Session(const Args& a, std::ostream& out, std::ostream& err)
        : a_(a), out_(out), err_(err), load_(fixture_dir(a), a.max_dim)
    {
    }

    Report report;

    // --- verify -----------------------------------------------------------

    void verify_algebra()
    {
        StructureTable A = load_.algebra(a_.input);
        struct Choice {
            bool on, negated;
            const char* name;
        };
        std::vector<Choice> chosen{{a_.anticommutative || a_.no_anticommutative, a_.no_anticommutative,
                                    "anticommutativity"},
                                   {a_.malcev || a_.no_malcev, a_.no_malcev, "malcev"},
                                   {a_.sagle || a_.no_sagle, a_.no_sagle, "sagle"},
                                   {a_.jacobi || a_.no_jacobi, a_.no_jacobi, "jacobi"},
                                   {a_.pre_malcev || a_.no_pre_malcev, a_.no_pre_malcev, "pre-malcev"}};
        bool any = false;
        for (const auto& c : chosen)
            any = any || c.on;
        if (!any) {
            if (A.kind() == AlgebraKind::anticommutative)
                chosen[0].on = chosen[1].on = true;
            else
                chosen[4].on = true;
        }
        for (const auto& c : chosen) {
            if (!c.on)
                continue;
            std::string name = c.name;
            CheckResult r = name == "anticommutativity" ? check_anticommutative(A)
                            : name == "malcev"          ? check_malcev(A)
                            : name == "sagle"           ? check_sagle(A)
                            : name == "jacobi"          ? check_jacobi(A)
                                                        : check_pre_malcev(A);
            report.add(verdict(r, A.basis(), !c.negated));
            if (!a_.oracle || name == "anticommutativity")
                continue;
            differential::Comparison d = name == "malcev"   ? differential::malcev(A)
                                         : name == "sagle"  ? differential::sagle(A)
                                         : name == "jacobi" ? differential::jacobi(A)
                                                            : differential::pre_malcev(A);
            oracle_verdict(d);
        }
        report.info.push_back("algebra: dimension " + std::to_string(A.dim()) + ", " + to_string(A.kind()));
    }

    void verify_rep()
    {
        LinearRep R = load_.rep(a_.input, a_.algebra);
        report.add(verdict(check_rep(R), R.space_names));
        if (a_.oracle)
            oracle_verdict(differential::rep(R));
    }

    void verify_bimodule()
    {
        Bimodule B = load_.bimodule(a_.input, a_.algebra);
        report.add(check_bimodule(B), B.space_names);
        if (a_.oracle)
            oracle_verdict(differential::bimodule(B));
    }

    void verify_o_operator()
    {
        LinearRep R = load_.rep(need(a_.rep, "--rep"), a_.algebra);
        LinearMap T = load_.map(need(a_.map, "--map"), R.algebra.dim(), R.space_dim());
        report.add(verdict(check_o_operator(T, R), R.algebra.basis()));
        if (a_.oracle)
            oracle_verdict(differential::o_operator(T, R));
    }

    void verify_pm_o_operator()
    {
        Bimodule B = load_.bimodule(need(a_.bimodule, "--bimodule"), a_.algebra);
        LinearMap T = load_.map(need(a_.map, "--map"), B.algebra.dim(), B.space_dim());
        report.add(verdict(check_pm_o_operator(T, B), B.algebra.basis()));
        if (a_.oracle)
            oracle_verdict(differential::pm_o_operator(T, B));
    }

    void verify_cybe(bool pre)
    {
        TwoTensor r = load_.tensor(a_.input, a_.algebra);
        report.add(verdict(pre ? check_pm_cybe(r) : check_cybe(r), r.algebra.basis()));
        report.info.push_back(std::string("tensor: ") +
                              (is_skew(r) ? "skew-symmetric" : is_symmetric(r) ? "symmetric" : "neither skew nor symmetric"));
        if (a_.oracle)
            oracle_verdict(pre ? differential::pm_cybe(r) : differential::cybe(r));
    }

    void verify_form()
    {
        BilinearForm B = load_.form(a_.input, a_.algebra);
        if (!a_.invariant && !a_.cyclic && !a_.symplectic)
            throw input_error("choose at least one of --invariant, --cyclic, --symplectic");
        if (a_.invariant) {
            report.add(verdict(check_invariant(B), B.algebra.basis()));
            if (a_.oracle)
                oracle_verdict(differential::invariant(B));
        }
        if (a_.cyclic && !a_.symplectic)
            report.add(verdict(check_cyclic(B), B.algebra.basis()));
        if (a_.symplectic)
            report.add(check_symplectic(B), B.algebra.basis());
        if ((a_.cyclic || a_.symplectic) && a_.oracle)
            oracle_verdict(differential::cyclic(B));
    }

    void verify_rep_iso()
    {
        LinearRep R1 = load_.rep(need(a_.rep, "--rep"), a_.algebra);
        LinearRep R2 = load_.rep(need(a_.rep2, "--rep2"), a_.algebra);
        LinearMap phi = load_.map(need(a_.map, "--map"), R1.space_dim(), R2.space_dim());
        report.add(check_rep_iso(phi, R1, R2), R1.space_names);
    }

    void verify_form_o_equivalence()
    {
        StructureTable A = load_.algebra(need(a_.algebra, "--algebra"));
        LinearMap T = load_.map(need(a_.map, "--map"), A.dim(), A.dim());
        std::vector<int> variants = a_.variant ? std::vector<int>{a_.variant} : std::vector<int>{1, 2, 3};
        for (int v : variants) {
            FormOperatorEquivalence e = form_operator_equivalence(A, T, v);
            std::string tag = "variant " + std::to_string(v);
            report.info.push_back(tag + ": bilinear identity " + (e.form_identity ? "holds" : "fails") +
                                  ", O-operator membership " + (e.o_operator ? "holds" : "fails"));
            Verdict vd = verdict(*e.report.find("equivalence"), A.basis());
            vd.name = "equivalence (" + tag + ")";
            report.add(vd);
        }
    }

    // --- build ------------------------------------------------------------

    void build_rep(const std::string& which)
    {
        if (which == "dual-rep") {
            emit(rep_document(dual_rep(load_.rep(need(a_.rep, "--rep"), a_.algebra))));
            return;
        }
        StructureTable A = load_.algebra(need(a_.algebra, "--algebra"));
        emit(rep_document(which == "adjoint" ? adjoint_rep(A) : coadjoint_rep(A)));
    }

    void build_dual_bimodule()
    {
        emit(bimodule_document(dual_bimodule(load_.bimodule(need(a_.bimodule, "--bimodule"), a_.algebra))));
    }

    void build_semidirect()
    {
        LinearRep R = load_.rep(need(a_.rep, "--rep"), a_.algebra);
        emit(io::algebra_to_json(semidirect_malcev(R)));
    }

    void build_pre_semidirect()
    {
        Bimodule B = load_.bimodule(need(a_.bimodule, "--bimodule"), a_.algebra);
        emit(io::algebra_to_json(semidirect_pre_malcev(B)));
    }

    void build_r_T_cmd()
    {
        LinearRep R = load_.rep(need(a_.rep, "--rep"), a_.algebra);
        LinearMap T = load_.map(need(a_.map, "--map"), R.algebra.dim(), R.space_dim());
        CheckResult o = check_o_operator(T, R);
        report.info.push_back(std::string("map is ") + (o.holds ? "" : "not ") + "an O-operator");
        emit(io::tensor_to_json(build_r_T(T, R)));
    }

    void build_s_T_cmd()
    {
        Bimodule B = load_.bimodule(need(a_.bimodule, "--bimodule"), a_.algebra);
        LinearMap T = load_.map(need(a_.map, "--map"), B.algebra.dim(), B.space_dim());
        CheckResult o = check_pm_o_operator(T, B);
        report.info.push_back(std::string("map is ") + (o.holds ? "" : "not ") + "a pre-Malcev O-operator");
        emit(io::tensor_to_json(build_s_T(T, B)));
    }

    void build_canonical(bool symmetric)
    {
        StructureTable A = load_.algebra(need(a_.algebra, "--algebra"));
        emit(io::tensor_to_json(symmetric ? canonical_s(A) : canonical_r(A)));
    }

    void build_pre_malcev_from_T()
    {
        LinearRep R = load_.rep(need(a_.rep, "--rep"), a_.algebra);
        LinearMap T = load_.map(need(a_.map, "--map"), R.algebra.dim(), R.space_dim());
        StructureTable P = pre_malcev_from_T(T, R);
        report.add(verdict(check_pre_malcev(P), P.basis()));
        bool same = commutator_algebra(P).same_products(R.algebra);
        report.add(Verdict{"commutator-recovers-algebra", same, true, {}, {}});
        emit(io::algebra_to_json(P));
    }

    void build_star_product()
    {
        LinearRep R = load_.rep(need(a_.rep, "--rep"), a_.algebra);
        LinearMap T = load_.map(need(a_.map, "--map"), R.algebra.dim(), R.space_dim());
        StarProduct s = star_product(T, R);
        report.add(verdict(s.o_operator, R.algebra.basis()));
        emit(io::algebra_to_json(s.table));
    }

    void build_from_symplectic()
    {
        BilinearForm B = load_.form(need(a_.form, "--form"), a_.algebra);
        CompatibleStructure c = pre_malcev_from_symplectic(B);
        report.add(verdict(c.compatibility, B.algebra.basis()));
        report.add(verdict(check_pre_malcev(c.table), c.table.basis()));
        emit(io::algebra_to_json(c.table));
    }

    void build_b_r()
    {
        emit(io::form_to_json(b_from_r(load_.tensor(need(a_.tensor, "--tensor"), a_.algebra))));
    }

    void build_phi_b()
    {
        emit(io::map_to_json(phi_from_form(load_.form(need(a_.form, "--form"), a_.algebra))));
    }

    void build_commutator()
    {
        emit(io::algebra_to_json(commutator_algebra(load_.algebra(need(a_.algebra, "--algebra")))));
    }

    // --- search -----------------------------------------------------------

    void search_o_operators()
    {
        LinearRep R = load_.rep(need(a_.rep, "--rep"), a_.algebra);
        std::vector<Rational> values;
        std::stringstream ss(a_.values);
        for (std::string item; std::getline(ss, item, ',');) {
            item.erase(0, item.find_first_not_of(' '));
            item.erase(item.find_last_not_of(' ') + 1);
            if (!item.empty())
                values.push_back(Rational::parse(item));
        }
        auto mask = a_.mask.empty() ? std::vector<std::vector<bool>>(R.algebra.dim(),
                                                                     std::vector<bool>(R.space_dim(), true))
                                    : load_.mask(a_.mask, R.algebra.dim(), R.space_dim());
        auto found = grid_search_o_operators(R, values, mask, a_.budget);
        json maps = json::array();
        for (const auto& T : found)
            maps.push_back(io::map_to_json(T));
        report.info.push_back("found " + std::to_string(found.size()) + " O-operator(s)");
        json doc;
        doc["count"] = found.size();
        doc["maps"] = std::move(maps);
        emit(doc);
    }

    void finish()
    {
        report.settle();
        bool json_on_stdout = a_.json_path == "-";
        bool object_on_stdout = pending_ && a_.output.empty();
        if (pending_) {
            if (!a_.output.empty()) {
                io::write_file(a_.output, io::format(*pending_));
                report.outputs.push_back(a_.output);
            } else if (json_on_stdout)
                report.object = *pending_;
            else
                out_ << io::format(*pending_);
        }
        report.print(object_on_stdout || json_on_stdout ? err_ : out_);
        write_machine_report();
    }

    void fail(int code, const std::string& message)
    {
        report.error = message;
        report.exit_code = code;
        report.print(err_);
        write_machine_report();
    }

private:
    static fs::path fixture_dir(const Args& a)
    {
        if (!a.fixtures.empty())
            return a.fixtures;
        if (const char* env = std::getenv("MALCEV_FIXTURES"))
            return env;
        return MALCEV_FIXTURE_DIR;
    }

    static const std::string& need(const std::optional<std::string>& v, const char* flag)
    {
        if (!v)
            throw input_error(std::string("missing ") + flag);
        return *v;
    }

    void oracle_verdict(const differential::Comparison& d)
    {
        report.add(Verdict{"oracle agreement (" + d.kind + ")", d.identical, true, d.mismatch, {}});
    }

    void emit(json doc) { pending_ = std::move(doc); }

    void write_machine_report()
    {
        if (a_.json_path.empty())
            return;
        std::string text = io::format(report.to_json());
        if (a_.json_path == "-")
            out_ << text;
        else
            io::write_file(a_.json_path, text);
    }

    const Args& a_;
    std::ostream& out_;
    std::ostream& err_;
    Loader load_;
    std::optional<json> pending_;
};

// ---------------------------------------------------------------------------
// Argument parsing.

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    Args a;
    CLI::App app{"Exact checks and constructions for Malcev and pre-Malcev algebras", "malcev"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--oracle", a.oracle, "Also run the brute-force oracle and diff the residuals");
    app.add_option("--json", a.json_path, "Write a machine-readable report to this path ('-' for stdout)");
    app.add_option("--max-dim", a.max_dim, "Refuse inputs of larger dimension")->capture_default_str();
    app.add_option("--fixtures", a.fixtures, "Directory searched for fixture names");

    std::function<void(Session&)> action;
    auto command = [&](CLI::App* parent, const std::string& name, const std::string& help,
                       std::function<void(Session&)> f) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->fallthrough();
        sub->callback([&action, f] { action = f; });
        return sub;
    };
    auto object_options = [&](CLI::App* sub, const std::vector<std::string>& which) {
        for (const auto& w : which) {
            if (w == "algebra")
                sub->add_option("--algebra", a.algebra, "Algebra file or fixture name");
            else if (w == "rep")
                sub->add_option("--rep", a.rep, "Representation file, fixture name, 'adjoint' or 'coadjoint'");
            else if (w == "rep2")
                sub->add_option("--rep2", a.rep2, "Second representation");
            else if (w == "bimodule")
                sub->add_option("--bimodule", a.bimodule,
                                "Bimodule file or one of regular, dual-regular, L0, dual-L0, dual-difference");
            else if (w == "map")
                sub->add_option("--map", a.map, "Map file (columns are images), 'identity' or 'zero'");
            else if (w == "tensor")
                sub->add_option("--tensor", a.tensor, "Two-tensor file");
            else if (w == "form")
                sub->add_option("--form", a.form, "Bilinear form file");
            else if (w == "output")
                sub->add_option("-o,--output", a.output, "Write the constructed object here (default: stdout)");
        }
    };

    CLI::App* verify = app.add_subcommand("verify", "Check identities and axioms");
    verify->require_subcommand(1);
    verify->fallthrough();

    CLI::App* valg = command(verify, "algebra", "Anticommutativity, Malcev, Sagle, Jacobi, pre-Malcev identities",
                             [](Session& s) { s.verify_algebra(); });
    valg->add_option("algebra", a.input, "Algebra file or fixture name")->required();
    for (auto [flag, var, neg] :
         {std::tuple{"anticommutative", &a.anticommutative, &a.no_anticommutative},
          std::tuple{"malcev", &a.malcev, &a.no_malcev}, std::tuple{"sagle", &a.sagle, &a.no_sagle},
          std::tuple{"jacobi", &a.jacobi, &a.no_jacobi}, std::tuple{"pre-malcev", &a.pre_malcev, &a.no_pre_malcev}}) {
        valg->add_flag(std::string("--") + flag, *var, std::string("Check the ") + flag + " identity");
        valg->add_flag(std::string("--no-") + flag + "-expected", *neg,
                       std::string("Check the ") + flag + " identity and expect it to fail");
    }

    CLI::App* vrep = command(verify, "rep", "Representation axiom", [](Session& s) { s.verify_rep(); });
    vrep->add_option("rep", a.input, "Representation file, fixture name, 'adjoint' or 'coadjoint'")->required();
    object_options(vrep, {"algebra"});

    CLI::App* vbim = command(verify, "bimodule", "The four bimodule axioms", [](Session& s) { s.verify_bimodule(); });
    vbim->add_option("bimodule", a.input, "Bimodule file or keyword")->required();
    object_options(vbim, {"algebra"});

    object_options(command(verify, "o-operator", "O-operator equation for a representation",
                           [](Session& s) { s.verify_o_operator(); }),
                   {"algebra", "rep", "map"});
    object_options(command(verify, "pm-o-operator", "O-operator equation for a pre-Malcev bimodule",
                           [](Session& s) { s.verify_pm_o_operator(); }),
                   {"algebra", "bimodule", "map"});

    for (bool pre : {false, true}) {
        CLI::App* v = command(verify, pre ? "pm-cybe" : "cybe",
                              pre ? "Classical Yang-Baxter equation on a pre-Malcev algebra"
                                  : "Classical Yang-Baxter equation",
                              [pre](Session& s) { s.verify_cybe(pre); });
        v->add_option("tensor", a.input, "Two-tensor file")->required();
        object_options(v, {"algebra"});
    }

    CLI::App* vform = command(verify, "form", "Invariance, cyclic sum, symplectic", [](Session& s) { s.verify_form(); });
    vform->add_option("form", a.input, "Bilinear form file")->required();
    vform->add_flag("--invariant", a.invariant, "B(xy, z) = B(x, yz)");
    vform->add_flag("--cyclic", a.cyclic, "B(xy, z) + B(yz, x) + B(zx, y) = 0");
    vform->add_flag("--symplectic", a.symplectic, "Skew, cyclic and non-degenerate");
    object_options(vform, {"algebra"});

    object_options(command(verify, "rep-iso", "phi is an isomorphism intertwining --rep2 into --rep",
                           [](Session& s) { s.verify_rep_iso(); }),
                   {"algebra", "rep", "rep2", "map"});

    CLI::App* vequiv = command(verify, "form-o-equivalence",
                               "Bilinear identity of <T^{-1}x, y> versus the matching O-operator membership",
                               [](Session& s) { s.verify_form_o_equivalence(); });
    object_options(vequiv, {"algebra", "map"});
    vequiv->add_option("--variant", a.variant, "1, 2 or 3 (default: all)")->check(CLI::Range(1, 3));

    CLI::App* build = app.add_subcommand("build", "Construct derived objects");
    build->require_subcommand(1);
    build->fallthrough();
    struct Builder {
        const char* name;
        const char* help;
        std::function<void(Session&)> f;
        std::vector<std::string> opts;
    };
    const std::vector<Builder> builders{
        {"adjoint", "Adjoint representation", [](Session& s) { s.build_rep("adjoint"); }, {"algebra", "output"}},
        {"coadjoint", "Coadjoint representation", [](Session& s) { s.build_rep("coadjoint"); }, {"algebra", "output"}},
        {"dual-rep", "Dual representation", [](Session& s) { s.build_rep("dual-rep"); }, {"algebra", "rep", "output"}},
        {"dual-bimodule", "Dual bimodule (l* - r*, -r*)", [](Session& s) { s.build_dual_bimodule(); },
         {"algebra", "bimodule", "output"}},
        {"semidirect", "Semidirect Malcev algebra A + V", [](Session& s) { s.build_semidirect(); },
         {"algebra", "rep", "output"}},
        {"pre-semidirect", "Semidirect pre-Malcev algebra", [](Session& s) { s.build_pre_semidirect(); },
         {"algebra", "bimodule", "output"}},
        {"rT", "Skew tensor T - twist(T) on A + V*", [](Session& s) { s.build_r_T_cmd(); },
         {"algebra", "rep", "map", "output"}},
        {"sT", "Symmetric tensor T + twist(T) on the pre-Malcev A + V*", [](Session& s) { s.build_s_T_cmd(); },
         {"algebra", "bimodule", "map", "output"}},
        {"canonical-r", "Canonical skew solution for a pre-Malcev algebra", [](Session& s) { s.build_canonical(false); },
         {"algebra", "output"}},
        {"canonical-s", "Canonical symmetric solution for a pre-Malcev algebra",
         [](Session& s) { s.build_canonical(true); }, {"algebra", "output"}},
        {"pre-malcev-from-T", "x·y = T(rho(x) T^{-1}(y)) for an invertible O-operator",
         [](Session& s) { s.build_pre_malcev_from_T(); }, {"algebra", "rep", "map", "output"}},
        {"star-product", "v*w = rho(T(v))w on the module", [](Session& s) { s.build_star_product(); },
         {"algebra", "rep", "map", "output"}},
        {"pre-malcev-from-symplectic", "Compatible pre-Malcev structure of a symplectic form",
         [](Session& s) { s.build_from_symplectic(); }, {"algebra", "form", "output"}},
        {"Br", "Bilinear form <T_r^{-1}(x), y>", [](Session& s) { s.build_b_r(); }, {"algebra", "tensor", "output"}},
        {"phiB", "Map x -> B(x, -) into the dual", [](Session& s) { s.build_phi_b(); }, {"algebra", "form", "output"}},
        {"commutator", "Commutator algebra x·y - y·x", [](Session& s) { s.build_commutator(); }, {"algebra", "output"}},
    };
    for (const auto& b : builders)
        object_options(command(build, b.name, b.help, b.f), b.opts);

    CLI::App* search = app.add_subcommand("search", "Finite searches");
    search->require_subcommand(1);
    search->fallthrough();
    CLI::App* so = command(search, "o-operators", "All O-operators with entries in a finite value set",
                           [](Session& s) { s.search_o_operators(); });
    object_options(so, {"algebra", "rep", "output"});
    so->add_option("--values", a.values, "Comma-separated rationals")->capture_default_str();
    so->add_option("--mask", a.mask, "Map file whose nonzero entries are free, or a row pattern like 0001/0001");
    so->add_option("--budget", a.budget, "Maximum number of candidates")->capture_default_str();

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Exit::ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return Exit::usage;
    }

    Session session(a, out, err);
    session.report.command = argv;
    try {
        action(session);
        session.finish();
        return session.report.exit_code;
    } catch (const input_error& e) {
        session.fail(Exit::usage, e.what());
    } catch (const std::domain_error& e) {
        session.fail(Exit::math_false, e.what());
    } catch (const std::exception& e) {
        session.fail(Exit::usage, e.what());
    }
    return session.report.exit_code;
}

} // namespace malcev::cli
