#pragma once

/// \file io.hpp
/// JSON documents for algebras, representations, bimodules, maps, tensors
/// and bilinear forms. Indices are 0-based; coefficients are strings in the
/// scalar grammar (plain JSON integers are accepted on input).

#include "malcev/algebra.hpp"
#include "malcev/reps.hpp"
#include "malcev/ybe.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace malcev::io {

using json = nlohmann::json;
namespace fs = std::filesystem;

inline constexpr const char* columns_convention = "columns-are-images";

inline json read_json(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

namespace detail {

[[noreturn]] inline void schema(const std::string& where, const std::string& what)
{
    throw input_error(where + ": " + what);
}

inline const json& field(const json& doc, const char* key, const std::string& where)
{
    if (!doc.is_object())
        schema(where, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end())
        schema(where, std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::size_t index(const json& v, std::size_t bound, const std::string& where)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        schema(where, "expected a nonnegative integer index");
    auto i = v.get<std::size_t>();
    if (i >= bound)
        schema(where, "index " + std::to_string(i) + " out of range (bound " + std::to_string(bound) + ")");
    return i;
}

inline std::size_t count(const json& doc, const char* key, const std::string& where)
{
    const json& v = field(doc, key, where);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        schema(where + "/" + key, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

inline std::vector<std::string> names(const json& doc, const char* key, std::size_t n, const std::string& prefix,
                                      const std::string& where)
{
    auto it = doc.find(key);
    if (it == doc.end())
        return default_basis(n, prefix);
    if (!it->is_array() || it->size() != n)
        schema(where + "/" + key, "expected a list of " + std::to_string(n) + " names");
    std::vector<std::string> out;
    for (const auto& s : *it) {
        if (!s.is_string())
            schema(where + "/" + key, "names must be strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

inline void check_convention(const json& doc, const std::string& where)
{
    auto it = doc.find("convention");
    if (it != doc.end() && *it != columns_convention)
        schema(where + "/convention", std::string("only \"") + columns_convention + "\" is supported");
}

} // namespace detail

inline Ring ring_from_json(const json& doc, const std::string& where)
{
    auto it = doc.find("ring");
    if (it == doc.end())
        return Ring{};
    if (!it->is_array())
        detail::schema(where + "/ring", "expected a list of parameter names");
    std::vector<std::string> names;
    for (const auto& s : *it) {
        if (!s.is_string())
            detail::schema(where + "/ring", "parameter names must be strings");
        names.push_back(s.get<std::string>());
    }
    return names.empty() ? Ring{} : Ring(std::move(names));
}

inline json ring_to_json(const Ring& ring) { return ring.names(); }

inline Scalar scalar_from_json(const json& v, const Ring& ring, const std::string& where)
{
    try {
        if (v.is_number_integer())
            return Scalar(Rational(v.get<long>()));
        if (v.is_string())
            return Scalar::parse(v.get<std::string>(), ring);
    } catch (const std::exception& e) {
        detail::schema(where, e.what());
    }
    detail::schema(where, "expected a coefficient string or integer");
}

/// The parameter ring shared by the scalars, or the empty ring.
template <class Range>
Ring ring_of(const Range& scalars)
{
    for (const Scalar& s : scalars)
        if (!s.is_rational())
            return s.ring();
    return Ring{};
}

inline Ring merge_rings(const Ring& a, const Ring& b)
{
    if (a.empty_ring())
        return b;
    if (b.empty_ring() || a == b)
        return a;
    throw input_error("ring mismatch between inputs");
}

inline Ring ring_of(const StructureTable& A)
{
    Ring r = A.ring();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (const auto& entry : A.product(i, j))
                if (!entry.second.is_rational())
                    r = merge_rings(r, entry.second.ring());
    return r;
}

// ---------------------------------------------------------------------------
// Algebras.

inline StructureTable algebra_from_json(const json& doc, const std::string& where)
{
    std::size_t n = detail::count(doc, "dim", where);
    auto basis = detail::names(doc, "basis", n, "e", where);
    Ring ring = ring_from_json(doc, where);
    const json& kind_v = detail::field(doc, "kind", where);
    AlgebraKind kind;
    if (kind_v == "anticommutative")
        kind = AlgebraKind::anticommutative;
    else if (kind_v == "general")
        kind = AlgebraKind::general;
    else
        detail::schema(where + "/kind", "expected \"anticommutative\" or \"general\"");
    StructureTable A(std::move(basis), kind, ring);
    const json& table = detail::field(doc, "table", where);
    if (!table.is_array())
        detail::schema(where + "/table", "expected a list of [i, j, k, coeff] entries");
    for (std::size_t e = 0; e < table.size(); ++e) {
        std::string at = where + "/table/" + std::to_string(e);
        const json& row = table[e];
        if (!row.is_array() || row.size() != 4)
            detail::schema(at, "expected [i, j, k, coeff]");
        std::size_t i = detail::index(row[0], n, at), j = detail::index(row[1], n, at), k = detail::index(row[2], n, at);
        Scalar c = scalar_from_json(row[3], ring, at);
        if (kind == AlgebraKind::anticommutative) {
            if (i == j && !c.is_zero())
                detail::schema(at, "anticommutative algebra cannot have a nonzero square " + A.basis()[i] +
                                       A.basis()[i]);
            if (i > j)
                detail::schema(at, "anticommutative tables list only entries with i < j");
        }
        A.add(i, j, k, c);
    }
    return A;
}

inline json algebra_to_json(const StructureTable& A)
{
    json table = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            if (A.kind() == AlgebraKind::anticommutative && i >= j)
                continue;
            for (const auto& [k, c] : A.product(i, j))
                table.push_back(json::array({i, j, k, c.render()}));
        }
    json doc;
    doc["dim"] = A.dim();
    doc["basis"] = A.basis();
    doc["ring"] = ring_to_json(ring_of(A));
    doc["kind"] = to_string(A.kind());
    doc["table"] = std::move(table);
    return doc;
}

// ---------------------------------------------------------------------------
// Dense and sparse matrices.

inline Matrix dense_from_json(const json& rows, std::size_t m, const Ring& ring, const std::string& where)
{
    if (!rows.is_array() || rows.size() != m)
        detail::schema(where, "expected " + std::to_string(m) + " rows");
    Matrix M(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        if (!rows[a].is_array() || rows[a].size() != m)
            detail::schema(where + "/" + std::to_string(a), "expected " + std::to_string(m) + " entries");
        for (std::size_t b = 0; b < m; ++b)
            M(a, b) = scalar_from_json(rows[a][b], ring, where + "/" + std::to_string(a) + "/" + std::to_string(b));
    }
    return M;
}

inline json dense_to_json(const Matrix& M)
{
    json rows = json::array();
    for (std::size_t a = 0; a < M.rows(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < M.cols(); ++b)
            row.push_back(M(a, b).render());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix sparse_from_json(const json& doc, const Ring& ring, const std::string& where)
{
    std::size_t r = detail::count(doc, "rows", where), c = detail::count(doc, "cols", where);
    Matrix M(r, c);
    const json& entries = detail::field(doc, "entries", where);
    if (!entries.is_array())
        detail::schema(where + "/entries", "expected a list of [i, j, coeff] entries");
    for (std::size_t e = 0; e < entries.size(); ++e) {
        std::string at = where + "/entries/" + std::to_string(e);
        const json& row = entries[e];
        if (!row.is_array() || row.size() != 3)
            detail::schema(at, "expected [i, j, coeff]");
        std::size_t i = detail::index(row[0], r, at), j = detail::index(row[1], c, at);
        M(i, j) += scalar_from_json(row[2], ring, at);
    }
    return M;
}

inline json sparse_to_json(const Matrix& M)
{
    json entries = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!M(i, j).is_zero())
                entries.push_back(json::array({i, j, M(i, j).render()}));
    json doc;
    doc["rows"] = M.rows();
    doc["cols"] = M.cols();
    doc["ring"] = ring_to_json(ring_of(M.data()));
    doc["entries"] = std::move(entries);
    return doc;
}

inline LinearMap map_from_json(const json& doc, const std::string& where)
{
    detail::check_convention(doc, where);
    return sparse_from_json(doc, ring_from_json(doc, where), where);
}

inline json map_to_json(const LinearMap& T)
{
    json doc = sparse_to_json(T);
    doc["convention"] = columns_convention;
    return doc;
}

// ---------------------------------------------------------------------------
// Representations and bimodules.

inline LinearRep rep_from_json(const json& doc, const StructureTable& A, const std::string& where)
{
    detail::check_convention(doc, where);
    std::size_t m = detail::count(doc, "space_dim", where);
    Ring ring = ring_from_json(doc, where);
    LinearRep R{A, detail::names(doc, "space_basis", m, "v", where), {}};
    const json& mats = detail::field(doc, "matrices", where);
    if (!mats.is_array() || mats.size() != A.dim())
        detail::schema(where + "/matrices", "expected one matrix per algebra basis element (" +
                                                std::to_string(A.dim()) + ")");
    for (std::size_t i = 0; i < mats.size(); ++i)
        R.action.push_back(dense_from_json(mats[i], m, ring, where + "/matrices/" + std::to_string(i)));
    return R;
}

inline json rep_to_json(const LinearRep& R)
{
    std::vector<Scalar> all;
    json mats = json::array();
    for (const auto& M : R.action) {
        mats.push_back(dense_to_json(M));
        all.insert(all.end(), M.data().begin(), M.data().end());
    }
    json doc;
    doc["space_dim"] = R.space_dim();
    doc["space_basis"] = R.space_names;
    doc["ring"] = ring_to_json(ring_of(all));
    doc["convention"] = columns_convention;
    doc["matrices"] = std::move(mats);
    return doc;
}

inline Bimodule bimodule_from_json(const json& doc, const StructureTable& A, const std::string& where)
{
    detail::check_convention(doc, where);
    std::size_t m = detail::count(doc, "space_dim", where);
    Ring ring = ring_from_json(doc, where);
    Bimodule B{A, detail::names(doc, "space_basis", m, "v", where), {}, {}};
    for (const char* side : {"left", "right"}) {
        const json& mats = detail::field(doc, side, where);
        if (!mats.is_array() || mats.size() != A.dim())
            detail::schema(where + "/" + side, "expected one matrix per algebra basis element (" +
                                                   std::to_string(A.dim()) + ")");
        auto& target = std::string(side) == "left" ? B.left : B.right;
        for (std::size_t i = 0; i < mats.size(); ++i)
            target.push_back(dense_from_json(mats[i], m, ring, where + "/" + side + "/" + std::to_string(i)));
    }
    return B;
}

inline json bimodule_to_json(const Bimodule& B)
{
    std::vector<Scalar> all;
    json left = json::array(), right = json::array();
    for (std::size_t i = 0; i < B.left.size(); ++i) {
        left.push_back(dense_to_json(B.left[i]));
        right.push_back(dense_to_json(B.right[i]));
        all.insert(all.end(), B.left[i].data().begin(), B.left[i].data().end());
        all.insert(all.end(), B.right[i].data().begin(), B.right[i].data().end());
    }
    json doc;
    doc["space_dim"] = B.space_dim();
    doc["space_basis"] = B.space_names;
    doc["ring"] = ring_to_json(ring_of(all));
    doc["convention"] = columns_convention;
    doc["left"] = std::move(left);
    doc["right"] = std::move(right);
    return doc;
}

// ---------------------------------------------------------------------------
// Tensors and forms carry their algebra inline or by reference.

inline json tensor_to_json(const TwoTensor& r, bool embed_algebra = true)
{
    json doc = sparse_to_json(r.coeffs);
    if (embed_algebra)
        doc["algebra"] = algebra_to_json(r.algebra);
    return doc;
}

inline json form_to_json(const BilinearForm& B, bool embed_algebra = true)
{
    json doc = sparse_to_json(B.matrix);
    if (embed_algebra)
        doc["algebra"] = algebra_to_json(B.algebra);
    return doc;
}

inline TwoTensor tensor_from_json(const json& doc, const StructureTable& A, const std::string& where)
{
    Matrix c = sparse_from_json(doc, ring_from_json(doc, where), where);
    if (c.rows() != A.dim() || c.cols() != A.dim())
        detail::schema(where, "tensor shape does not match the algebra dimension " + std::to_string(A.dim()));
    return TwoTensor{A, std::move(c)};
}

inline BilinearForm form_from_json(const json& doc, const StructureTable& A, const std::string& where)
{
    Matrix c = sparse_from_json(doc, ring_from_json(doc, where), where);
    if (c.rows() != A.dim() || c.cols() != A.dim())
        detail::schema(where, "form shape does not match the algebra dimension " + std::to_string(A.dim()));
    return BilinearForm{A, std::move(c)};
}

// ---------------------------------------------------------------------------
// Output formatting: objects and outer arrays one item per line, arrays of
// scalars inline, so files stay diffable.

namespace detail {

inline bool is_flat(const json& v)
{
    if (!v.is_array())
        return !v.is_object();
    for (const auto& x : v)
        if (x.is_array() || x.is_object())
            return false;
    return true;
}

inline void format(std::ostringstream& os, const json& v, int indent)
{
    std::string pad(static_cast<std::size_t>(indent), ' ');
    std::string inner(static_cast<std::size_t>(indent + 2), ' ');
    if (is_flat(v)) {
        if (!v.is_array()) {
            os << v.dump(-1, ' ', false);
            return;
        }
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? ", " : "") << v[i].dump(-1, ' ', false);
        os << "]";
        return;
    }
    if (v.is_array()) {
        os << "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            os << inner;
            format(os, v[i], indent + 2);
            os << (i + 1 < v.size() ? ",\n" : "\n");
        }
        os << pad << "]";
        return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        os << inner << json(it.key()).dump(-1, ' ', false) << ": ";
        format(os, it.value(), indent + 2);
        os << (i + 1 < v.size() ? ",\n" : "\n");
    }
    os << pad << "}";
}

} // namespace detail

inline std::string format(const json& v)
{
    std::ostringstream os;
    detail::format(os, v, 0);
    os << "\n";
    return os.str();
}

inline void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write '" + path.string() + "'");
    out << text;
}

} // namespace malcev::io
