#include "prelie/document.hpp"

#include "prelie/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace prelie {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw input_error(path + ": " + what);
}

Rational entry_to_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const input_error& e) {
            fail(path, e.what());
        }
    }
    if (j.is_number_float()) fail(path, "floating-point entries are not accepted");
    fail(path, "expected an integer or a rational string");
}

Matrix parse_matrix(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) fail(path, "expected nonempty rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            fail(path + "[" + std::to_string(i) + "]", "ragged row");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = entry_to_rational(
                j[i][k], path + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

AlgebraKind parse_kind(const std::string& s, const std::string& path) {
    if (s == "prelie") return AlgebraKind::pre_lie;
    if (s == "lie") return AlgebraKind::lie;
    if (s == "associative") return AlgebraKind::associative;
    if (s == "unchecked") return AlgebraKind::unchecked;
    fail(path, "unknown kind '" + s + "'");
}

} // namespace

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports line/column (or byte) positions in what().
        throw input_error(e.what());
    }
    if (!j.is_object()) fail("$", "top level must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        fail("dim", "missing or non-integer");
    const auto dim_value = j["dim"].get<std::int64_t>();
    if (dim_value < 1) fail("dim", "must be positive");
    const std::size_t n = static_cast<std::size_t>(dim_value);

    const AlgebraKind kind =
        j.contains("kind") ? parse_kind(j["kind"].get<std::string>(), "kind")
                           : AlgebraKind::unchecked;

    std::vector<std::string> basis;
    if (j.contains("basis")) {
        if (!j["basis"].is_array() || j["basis"].size() != n)
            fail("basis", "expected " + std::to_string(n) + " labels");
        for (const auto& b : j["basis"]) basis.push_back(b.get<std::string>());
    }

    if (!j.contains("product")) fail("product", "missing");
    const json& p = j["product"];
    if (!p.is_array() || p.size() != n) fail("product", "expected " + std::to_string(n) + " rows");
    MultiMap prod(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string rowpath = "product[" + std::to_string(i) + "]";
        if (!p[i].is_array() || p[i].size() != n) fail(rowpath, "ragged row");
        for (std::size_t jj = 0; jj < n; ++jj) {
            const std::string cellpath = rowpath + "[" + std::to_string(jj) + "]";
            if (!p[i][jj].is_array() || p[i][jj].size() != n)
                fail(cellpath, "expected a coefficient vector of length " + std::to_string(n));
            for (std::size_t k = 0; k < n; ++k)
                prod.coeff({i, jj}, k) =
                    entry_to_rational(p[i][jj][k], cellpath + "[" + std::to_string(k) + "]");
        }
    }

    Document doc;
    doc.algebra = Algebra(Cochain(std::move(prod)), kind, std::move(basis));

    if (j.contains("operators")) {
        for (const auto& [name, value] : j["operators"].items())
            doc.operators.emplace(name, parse_matrix(value, "operators." + name));
    }
    if (j.contains("forms")) {
        for (const auto& [name, value] : j["forms"].items()) {
            const std::string path = "forms." + name;
            if (!value.is_object() || !value.contains("matrix") || !value.contains("symmetry"))
                fail(path, "expected {matrix, symmetry}");
            const std::string sym = value["symmetry"].get<std::string>();
            FormSymmetry symmetry;
            if (sym == "symmetric")
                symmetry = FormSymmetry::symmetric;
            else if (sym == "skew")
                symmetry = FormSymmetry::skew;
            else
                fail(path + ".symmetry", "expected 'symmetric' or 'skew'");
            Matrix m = parse_matrix(value["matrix"], path + ".matrix");
            if (m.rows() != n || m.cols() != n) fail(path, "form must be square of the algebra dimension");
            try {
                doc.forms.emplace(name, BilinearForm(std::move(m), symmetry));
            } catch (const input_error& e) {
                fail(path, e.what());
            }
        }
    }
    if (j.contains("tensors")) {
        for (const auto& [name, value] : j["tensors"].items()) {
            const std::string path = "tensors." + name;
            Matrix m = parse_matrix(value, path);
            if (m.rows() != n || m.cols() != n) fail(path, "tensor must be square of the algebra dimension");
            try {
                doc.tensors.emplace(name, SymTwoTensor(std::move(m)));
            } catch (const input_error& e) {
                fail(path, e.what());
            }
        }
    }
    if (j.contains("representations")) {
        for (const auto& [name, value] : j["representations"].items()) {
            const std::string path = "representations." + name;
            if (!value.is_object() || !value.contains("dimV") || !value.contains("rho") ||
                !value.contains("mu"))
                fail(path, "expected {dimV, rho, mu}");
            Representation rep;
            const auto dimv = value["dimV"].get<std::int64_t>();
            if (dimv < 1) fail(path + ".dimV", "must be positive");
            rep.dim_v = static_cast<std::size_t>(dimv);
            for (const char* fam : {"rho", "mu"}) {
                const json& list = value[fam];
                if (!list.is_array() || list.size() != n)
                    fail(path + "." + fam, "expected " + std::to_string(n) + " matrices");
                for (std::size_t i = 0; i < n; ++i) {
                    Matrix m = parse_matrix(list[i], path + "." + fam + "[" + std::to_string(i) + "]");
                    if (m.rows() != rep.dim_v || m.cols() != rep.dim_v)
                        fail(path + "." + fam + "[" + std::to_string(i) + "]",
                             "matrix must be dimV x dimV");
                    (fam == std::string("rho") ? rep.rho : rep.mu).push_back(std::move(m));
                }
            }
            doc.representations.emplace(name, std::move(rep));
        }
    }
    return doc;
}

std::string serialize_document(const Document& doc) {
    const Algebra& a = doc.algebra;
    const std::size_t n = a.dim();
    json j;
    j["kind"] = kind_name(a.kind());
    j["dim"] = n;
    if (!a.basis().empty()) j["basis"] = a.basis();

    json prod = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < n; ++jj) {
            json cell = json::array();
            for (std::size_t k = 0; k < n; ++k) cell.push_back(to_string(a.c(i, jj, k)));
            row.push_back(std::move(cell));
        }
        prod.push_back(std::move(row));
    }
    j["product"] = std::move(prod);

    if (!doc.operators.empty()) {
        json ops;
        for (const auto& [name, m] : doc.operators) ops[name] = matrix_to_json(m);
        j["operators"] = std::move(ops);
    }
    if (!doc.forms.empty()) {
        json forms;
        for (const auto& [name, f] : doc.forms) {
            forms[name] = {{"matrix", matrix_to_json(f.matrix)},
                           {"symmetry",
                            f.symmetry == FormSymmetry::symmetric ? "symmetric" : "skew"}};
        }
        j["forms"] = std::move(forms);
    }
    if (!doc.tensors.empty()) {
        json tensors;
        for (const auto& [name, t] : doc.tensors) tensors[name] = matrix_to_json(t.matrix);
        j["tensors"] = std::move(tensors);
    }
    if (!doc.representations.empty()) {
        json reps;
        for (const auto& [name, rep] : doc.representations) {
            json rho = json::array(), mu = json::array();
            for (const auto& m : rep.rho) rho.push_back(matrix_to_json(m));
            for (const auto& m : rep.mu) mu.push_back(matrix_to_json(m));
            reps[name] = {{"dimV", rep.dim_v}, {"rho", std::move(rho)}, {"mu", std::move(mu)}};
        }
        j["representations"] = std::move(reps);
    }
    return j.dump(2) + "\n";
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

void save_document(const Document& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << serialize_document(doc);
}

} // namespace prelie
