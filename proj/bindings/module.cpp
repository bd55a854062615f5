#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prelie/algebra.hpp"
#include "prelie/cohomology.hpp"
#include "prelie/constructions.hpp"
#include "prelie/document.hpp"
#include "prelie/errors.hpp"
#include "prelie/fixtures.hpp"
#include "prelie/nijenhuis.hpp"
#include "prelie/operators.hpp"
#include "prelie/paracomplex.hpp"
#include "prelie/search.hpp"
#include "prelie/smatrix.hpp"

#include <sstream>

namespace py = pybind11;

namespace pybind11::detail {

// Exact rationals cross the boundary as fractions.Fraction (ints and
// "p/q" strings are accepted on the way in; floats are rejected).
template <> struct type_caster<mpq_class> {
public:
    PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) return false;
        object obj = reinterpret_borrow<object>(src);
        try {
            if (isinstance<str>(obj)) {
                value = prelie::parse_rational(obj.cast<std::string>());
                return true;
            }
            if (PyLong_Check(src.ptr())) {
                value = mpq_class(mpz_class(static_cast<std::string>(str(obj))));
                return true;
            }
            if (hasattr(obj, "numerator") && hasattr(obj, "denominator")) {
                const mpz_class num(static_cast<std::string>(str(obj.attr("numerator"))));
                const mpz_class den(static_cast<std::string>(str(obj.attr("denominator"))));
                if (den == 0) return false;
                value = mpq_class(num, den);
                value.canonicalize();
                return true;
            }
        } catch (const std::exception&) {
            return false;
        }
        return false;
    }

    static handle cast(const mpq_class& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(prelie::to_string(src)).release();
    }
};

// Matrices cross as rectangular lists of rows.
template <> struct type_caster<prelie::Matrix> {
public:
    PYBIND11_TYPE_CASTER(prelie::Matrix, const_name("list[list[Fraction]]"));

    bool load(handle src, bool convert) {
        if (!isinstance<sequence>(src)) return false;
        const auto rows = reinterpret_borrow<sequence>(src);
        std::vector<prelie::Vec> data;
        for (const auto& row : rows) {
            if (!isinstance<sequence>(row)) return false;
            prelie::Vec v;
            for (const auto& cell : reinterpret_borrow<sequence>(row)) {
                type_caster<mpq_class> c;
                if (!c.load(cell, convert)) return false;
                v.push_back(static_cast<mpq_class&>(c));
            }
            data.push_back(std::move(v));
        }
        try {
            value = prelie::Matrix::from_rows(data);
        } catch (const std::exception&) {
            return false;
        }
        return true;
    }

    static handle cast(const prelie::Matrix& src, return_value_policy policy, handle parent) {
        list rows;
        for (std::size_t i = 0; i < src.rows(); ++i) {
            list row;
            for (std::size_t j = 0; j < src.cols(); ++j)
                row.append(reinterpret_steal<object>(
                    type_caster<mpq_class>::cast(src.at(i, j), policy, parent)));
            rows.append(row);
        }
        return rows.release();
    }
};

} // namespace pybind11::detail

namespace {

using namespace prelie;

AlgebraKind kind_from_string(const std::string& s) {
    if (s == "prelie") return AlgebraKind::pre_lie;
    if (s == "lie") return AlgebraKind::lie;
    if (s == "associative") return AlgebraKind::associative;
    if (s == "unchecked") return AlgebraKind::unchecked;
    throw input_error("unknown kind '" + s + "'");
}

Algebra make_algebra(const std::vector<std::vector<Vec>>& product, const std::string& kind,
                     const std::vector<std::string>& basis) {
    return Algebra(Cochain::from_bilinear(product), kind_from_string(kind), basis);
}

std::vector<std::vector<Vec>> product_table(const Algebra& a) {
    std::vector<std::vector<Vec>> table(a.dim(), std::vector<Vec>(a.dim()));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) table[i][j] = a.multiply_basis(i, j);
    return table;
}

BilinearForm form_of(const Matrix& m) {
    return BilinearForm(m, m.is_symmetric() ? FormSymmetry::symmetric : FormSymmetry::skew);
}

} // namespace

PYBIND11_MODULE(_prelie, m) {
    m.doc() = "Exact-arithmetic checks for operator structures on pre-Lie algebras";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("ok", &CheckResult::ok)
        .def_readonly("witness", &CheckResult::witness)
        .def("__bool__", [](const CheckResult& r) { return r.ok; })
        .def("__repr__", [](const CheckResult& r) {
            return r.ok ? std::string("CheckResult(ok)")
                        : "CheckResult(fail: " + r.witness + ")";
        });

    py::class_<Algebra>(m, "Algebra")
        .def(py::init(&make_algebra), py::arg("product"), py::arg("kind") = "unchecked",
             py::arg("basis") = std::vector<std::string>{})
        .def_property_readonly("dim", &Algebra::dim)
        .def_property_readonly("kind", [](const Algebra& a) { return kind_name(a.kind()); })
        .def_property_readonly("basis", &Algebra::basis)
        .def_property_readonly("product", &product_table)
        .def("multiply", &Algebra::multiply)
        .def("left_mult",
             [](const Algebra& a, const Vec& x) { return a.left_mult(x); })
        .def("right_mult",
             [](const Algebra& a, const Vec& x) { return a.right_mult(x); })
        .def("with_kind",
             [](const Algebra& a, const std::string& k) { return a.with_kind(kind_from_string(k)); })
        .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; })
        .def("__repr__", [](const Algebra& a) {
            return "Algebra(dim=" + std::to_string(a.dim()) + ", kind=" + kind_name(a.kind()) + ")";
        });

    py::class_<Representation>(m, "Representation")
        .def(py::init([](std::size_t dim_v, std::vector<Matrix> rho, std::vector<Matrix> mu) {
                 return Representation{dim_v, std::move(rho), std::move(mu)};
             }),
             py::arg("dim_v"), py::arg("rho"), py::arg("mu"))
        .def_readonly("dim_v", &Representation::dim_v)
        .def_readonly("rho", &Representation::rho)
        .def_readonly("mu", &Representation::mu);

    m.def("check_pre_lie", &check_pre_lie);
    m.def("check_lie", &check_lie);
    m.def("check_associative", &check_associative);
    m.def("check_commutative", &check_commutative);
    m.def("verify_kind", &verify_kind);
    m.def("sub_adjacent", &sub_adjacent);
    m.def("trivial_representation", &trivial_representation);
    m.def("regular_representation", &regular_representation);
    m.def("dual_regular_representation", &dual_regular_representation);
    m.def("check_representation", &check_representation);
    m.def("semidirect_product", &semidirect_product);

    m.def("is_closed_form", [](const Algebra& a, const Matrix& form) {
        return is_closed_form(a, form);
    });
    m.def("is_lie_two_cocycle", [](const Algebra& a, const Matrix& omega) {
        return is_lie_two_cocycle(a, BilinearForm(omega, FormSymmetry::skew));
    });

    m.def("deformed_algebra", &deformed_algebra);
    m.def("torsion_table", [](const Algebra& a, const Matrix& op) {
        const Cochain t = torsion(a, op);
        std::vector<std::vector<Vec>> table(a.dim(), std::vector<Vec>(a.dim()));
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) table[i][j] = t.value({i, j});
        return table;
    });
    m.def("is_nijenhuis", &is_nijenhuis);

    py::class_<DeformationReport>(m, "DeformationReport")
        .def_readonly("is_cocycle", &DeformationReport::is_cocycle)
        .def_readonly("is_square_zero", &DeformationReport::is_square_zero)
        .def_readonly("is_deformation", &DeformationReport::is_deformation)
        .def_readonly("cocycle_witness", &DeformationReport::cocycle_witness)
        .def_readonly("square_witness", &DeformationReport::square_witness);
    m.def("check_deformation", [](const Algebra& a, const std::vector<std::vector<Vec>>& omega) {
        return check_deformation(a, Cochain::from_bilinear(omega));
    });

    py::class_<EquivalenceReport>(m, "EquivalenceReport")
        .def_readonly("ok", &EquivalenceReport::ok)
        .def_readonly("difference_is_exact", &EquivalenceReport::difference_is_exact)
        .def_readonly("integral_condition", &EquivalenceReport::integral_condition)
        .def_readonly("image_condition", &EquivalenceReport::image_condition)
        .def("__bool__", [](const EquivalenceReport& r) { return r.ok; });
    m.def("check_equivalence",
          [](const Algebra& a, const std::vector<std::vector<Vec>>& omega,
             const std::vector<std::vector<Vec>>& omega_prime, const Matrix& op) {
              return check_equivalence(a, Cochain::from_bilinear(omega),
                                       Cochain::from_bilinear(omega_prime), op);
          });
    m.def("deformation_generator", [](const Algebra& a, const Matrix& op) {
        const Cochain d = deformed_product(a, op);
        std::vector<std::vector<Vec>> table(a.dim(), std::vector<Vec>(a.dim()));
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) table[i][j] = d.value({i, j});
        return table;
    });
    m.def("operator_polynomial", &operator_polynomial, py::arg("op"), py::arg("lowest"),
          py::arg("coeffs"));

    m.def("is_o_operator", &is_o_operator);
    m.def("is_rota_baxter", &is_rota_baxter);
    m.def("lift_to_semidirect",
          [](const Algebra& a, const Representation& rep, const Matrix& t, const std::string& mode,
             const Rational& weight) {
              LiftMode lm;
              if (mode == "rota-baxter")
                  lm = LiftMode::rota_baxter;
              else if (mode == "nilpotent")
                  lm = LiftMode::nilpotent;
              else if (mode == "idempotent")
                  lm = LiftMode::idempotent;
              else
                  throw input_error("mode must be rota-baxter, nilpotent, or idempotent");
              const auto result = lift_to_semidirect(a, rep, t, lm, weight);
              return py::make_tuple(result.semidirect, result.op, result.verdict);
          },
          py::arg("algebra"), py::arg("rep"), py::arg("t"), py::arg("mode"),
          py::arg("weight") = Rational(0));
    m.def("are_compatible_o_operators", &are_compatible_o_operators);
    m.def("nijenhuis_from_compatible", &nijenhuis_from_compatible);

    py::class_<LDendriform>(m, "LDendriform")
        .def(py::init([](const std::vector<std::vector<Vec>>& right,
                         const std::vector<std::vector<Vec>>& left) {
                 return LDendriform{Cochain::from_bilinear(right), Cochain::from_bilinear(left)};
             }),
             py::arg("right"), py::arg("left"))
        .def_property_readonly("dim", &LDendriform::dim)
        .def_property_readonly("right",
                               [](const LDendriform& d) {
                                   std::vector<std::vector<Vec>> t(d.dim(),
                                                                    std::vector<Vec>(d.dim()));
                                   for (std::size_t i = 0; i < d.dim(); ++i)
                                       for (std::size_t j = 0; j < d.dim(); ++j)
                                           t[i][j] = d.right.value({i, j});
                                   return t;
                               })
        .def_property_readonly("left", [](const LDendriform& d) {
            std::vector<std::vector<Vec>> t(d.dim(), std::vector<Vec>(d.dim()));
            for (std::size_t i = 0; i < d.dim(); ++i)
                for (std::size_t j = 0; j < d.dim(); ++j) t[i][j] = d.left.value({i, j});
            return t;
        });
    m.def("is_l_dendriform", &is_l_dendriform);
    m.def("are_compatible_l_dendriform", &are_compatible_l_dendriform);
    m.def("l_dendriform_from_o_operator", &l_dendriform_from_o_operator);
    m.def("l_dendriform_on_algebra", &l_dendriform_on_algebra);
    m.def("vertical_prelie", &vertical_prelie);

    m.def("s_bracket_is_zero", [](const Algebra& a, const Matrix& r1, const Matrix& r2) {
        return s_bracket(a, SymTwoTensor(r1), SymTwoTensor(r2)).is_zero();
    });
    m.def("is_s_matrix",
          [](const Algebra& a, const Matrix& r) { return is_s_matrix(a, SymTwoTensor(r)); });
    m.def("are_compatible_smatrices", [](const Algebra& a, const Matrix& r1, const Matrix& r2) {
        return are_compatible_smatrices(a, SymTwoTensor(r1), SymTwoTensor(r2));
    });
    m.def("dual_product",
          [](const Algebra& a, const Matrix& r) { return dual_product(a, SymTwoTensor(r)); });
    m.def("hessian_from_r", [](const Algebra& a, const Matrix& r) {
        return hessian_from_r(a, SymTwoTensor(r)).matrix;
    });
    m.def("r_from_hessian", [](const Algebra& a, const Matrix& b) {
        return r_from_hessian(a, BilinearForm(b, FormSymmetry::symmetric)).matrix;
    });
    m.def("is_pseudo_hessian", [](const Algebra& a, const Matrix& b) {
        return is_pseudo_hessian(a, BilinearForm(b, FormSymmetry::symmetric));
    });
    m.def("is_pseudo_hessian_nijenhuis", [](const Algebra& a, const Matrix& b, const Matrix& op) {
        return is_pseudo_hessian_nijenhuis(a, BilinearForm(b, FormSymmetry::symmetric), op);
    });
    m.def("hessian_sequence", [](const Algebra& a, const Matrix& b, const Matrix& op, long k) {
        return hessian_sequence(a, BilinearForm(b, FormSymmetry::symmetric), op, k).matrix;
    });
    m.def("s_sequence", [](const Algebra& a, const Matrix& r1, const Matrix& r2, long n) {
        return s_sequence(a, SymTwoTensor(r1), SymTwoTensor(r2), n).matrix;
    });
    m.def("phn_bridge", [](const Algebra& a, const Matrix& r1, const Matrix& r2) {
        const auto [b, op] = phn_bridge(a, SymTwoTensor(r1), SymTwoTensor(r2));
        return py::make_tuple(b.matrix, op);
    });
    m.def("phn_to_smatrices", [](const Algebra& a, const Matrix& b, const Matrix& op) {
        const auto [r1, r2] = phn_to_smatrices(a, BilinearForm(b, FormSymmetry::symmetric), op);
        return py::make_tuple(r1.matrix, r2.matrix);
    });
    m.def("dual_nijenhuis", [](const Algebra& a, const Matrix& r1, const Matrix& r2) {
        const auto result = dual_nijenhuis(a, SymTwoTensor(r1), SymTwoTensor(r2));
        return py::make_tuple(result.op, result.dual_algebra, result.report);
    });

    m.def("is_paracomplex", [](const Algebra& a, const Matrix& op) {
        const auto r = is_paracomplex(a, op);
        return py::make_tuple(r.verdict, r.plus_basis, r.minus_basis);
    });
    m.def("is_quadratic", [](const Algebra& a, const Matrix& omega) {
        return is_quadratic(a, BilinearForm(omega, FormSymmetry::skew));
    });
    m.def("prelie_from_symplectic", [](const Algebra& lie, const Matrix& omega) {
        return prelie_from_symplectic(lie, BilinearForm(omega, FormSymmetry::skew));
    });
    m.def("is_para_kahler", [](const Algebra& lie, const Matrix& omega, const Matrix& op) {
        return is_para_kahler(lie, BilinearForm(omega, FormSymmetry::skew), op);
    });
    m.def("is_paracomplex_quadratic", [](const Algebra& a, const Matrix& omega, const Matrix& op) {
        return is_paracomplex_quadratic(a, BilinearForm(omega, FormSymmetry::skew), op);
    });
    m.def("paracomplex_from_splitting",
          [](const Algebra& a, const std::vector<Vec>& plus, const std::vector<Vec>& minus,
             const Matrix& form, const std::string& flavor) {
              const SplittingFlavor f = flavor == "quadratic" ? SplittingFlavor::quadratic
                                        : flavor == "hessian"
                                            ? SplittingFlavor::hessian
                                            : throw input_error("flavor must be quadratic or hessian");
              const auto r = paracomplex_from_splitting(a, plus, minus, form_of(form), f);
              return py::make_tuple(r.op, r.verdict);
          });
    m.def("is_paracomplex_pseudo_hessian", [](const Algebra& a, const Matrix& b, const Matrix& op) {
        return is_paracomplex_pseudo_hessian(a, BilinearForm(b, FormSymmetry::symmetric), op);
    });

    m.def("satisfies_cybe", &satisfies_cybe);
    m.def("prelie_from_cybe", &prelie_from_cybe);
    m.def("satisfies_rb_assoc", &satisfies_rb_assoc);
    m.def("prelie_from_rb_assoc", &prelie_from_rb_assoc);
    m.def("burgers_prelie", &burgers_prelie);
    m.def("is_derivation", &is_derivation);
    m.def("is_novikov", &is_novikov);
    m.def("novikov_from_derivation", [](const Algebra& comm, const Matrix& d, const Rational& s) {
        const auto r = novikov_from_derivation(comm, d, s);
        return py::make_tuple(r.algebra, r.novikov);
    });

    m.def("grid_values", &grid_values, py::arg("lo"), py::arg("hi"),
          py::arg("denominators") = std::vector<long>{1});
    m.def("search_nijenhuis", [](const Algebra& a, const std::vector<Rational>& values) {
        return search_nijenhuis(a, values).hits;
    });
    m.def("search_rota_baxter",
          [](const Algebra& a, const Rational& weight, const std::vector<Rational>& values) {
              return search_rota_baxter(a, weight, values).hits;
          });
    m.def("search_smatrix", [](const Algebra& a, const std::vector<Rational>& values) {
        return search_smatrix(a, values).hits;
    });

    py::class_<Document>(m, "Document")
        .def(py::init<>())
        .def_readwrite("algebra", &Document::algebra)
        .def_property_readonly("operators", [](const Document& d) { return d.operators; })
        .def_property_readonly("tensors",
                               [](const Document& d) {
                                   std::map<std::string, Matrix> out;
                                   for (const auto& [k, v] : d.tensors) out[k] = v.matrix;
                                   return out;
                               })
        .def_property_readonly("forms",
                               [](const Document& d) {
                                   std::map<std::string, Matrix> out;
                                   for (const auto& [k, v] : d.forms) out[k] = v.matrix;
                                   return out;
                               })
        .def_property_readonly("representations",
                               [](const Document& d) { return d.representations; });
    m.def("loads", &parse_document);
    m.def("dumps", &serialize_document);
    m.def("load", &load_document);

    m.def("run_fixture_checks", [] {
        py::list out;
        for (const auto& c : fixtures::run_all()) {
            py::dict d;
            d["fixture"] = c.fixture;
            d["check"] = c.check;
            d["ref"] = c.ref;
            d["pass"] = c.pass;
            d["detail"] = c.detail;
            out.append(std::move(d));
        }
        return out;
    });
}
