#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "modlie/cartantype.hpp"
#include "modlie/errors.hpp"
#include "modlie/liealg.hpp"
#include "modlie/matrix.hpp"
#include "modlie/modrep.hpp"
#include "modlie/poly.hpp"
#include "modlie/rootdata.hpp"
#include "modlie/scenarios.hpp"

namespace py = pybind11;
using namespace modlie;

namespace {

using IntRows = std::vector<std::vector<long long>>;

Vec to_vec(const LieAlgebra& L, const std::vector<long long>& x) {
    if (x.size() != L.dim()) throw ShapeMismatch("expected a vector of length " + std::to_string(L.dim()));
    Vec v;
    for (long long c : x) v.push_back(L.field()->from_int(c));
    return v;
}

std::vector<int> to_ints(std::span<const Elem> v) { return {v.begin(), v.end()}; }

Matrix to_matrix(const IntRows& rows, int p) {
    const Field f = FiniteField::get(p);
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ShapeMismatch("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = f->from_int(rows[r][c]);
    }
    return m;
}

std::vector<std::vector<int>> rows_of(const Matrix& m) {
    std::vector<std::vector<int>> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_ints(m.row(r)));
    return out;
}

std::string report(const CheckReport& r) { return r.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Structure-constant Lie algebras over small finite fields";
    py::register_exception<Error>(m, "ModlieError", PyExc_RuntimeError);

    py::class_<LieAlgebra>(m, "LieAlgebra")
        .def_property_readonly("dim", &LieAlgebra::dim)
        .def_property_readonly("p", [](const LieAlgebra& L) { return L.field()->p(); })
        .def_property_readonly("field_degree", [](const LieAlgebra& L) { return L.field()->degree(); })
        .def_property_readonly("name", &LieAlgebra::name)
        .def_property_readonly("labels", &LieAlgebra::labels)
        .def("bracket",
             [](const LieAlgebra& L, const std::vector<long long>& x, const std::vector<long long>& y) {
                 return to_ints(L.bracket(to_vec(L, x), to_vec(L, y)));
             })
        .def("bracket_basis", [](const LieAlgebra& L, std::size_t i, std::size_t j) {
            if (i >= L.dim() || j >= L.dim()) throw py::index_error("basis index out of range");
            return to_ints(L.bracket_basis(i, j));
        })
        .def("check_jacobi", &LieAlgebra::check_jacobi)
        .def("check_antisymmetry", &LieAlgebra::check_antisymmetry)
        .def("is_simple", [](const LieAlgebra& L) { return is_simple(L); })
        .def("is_solvable", [](const LieAlgebra& L) { return is_solvable(L); })
        .def("center_dim", [](const LieAlgebra& L) { return center(L).dim(); })
        .def("radical_dim", [](const LieAlgebra& L) { return radical(L).dim(); })
        .def("derivation_dim", [](const LieAlgebra& L) { return derivations(L).der.algebra.dim(); })
        .def("p_power",
             [](const LieAlgebra& L, const std::vector<long long>& x) -> std::optional<std::vector<int>> {
                 auto y = p_power(L, to_vec(L, x));
                 if (!y) return std::nullopt;
                 return to_ints(*y);
             })
        .def("killing", [](const LieAlgebra& L, const std::vector<long long>& x, const std::vector<long long>& y) {
            return static_cast<int>(killing_form(L, to_vec(L, x), to_vec(L, y)));
        })
        .def("dump", [](const LieAlgebra& L) { return dump_string(L); })
        .def("__repr__", [](const LieAlgebra& L) { return "<LieAlgebra " + L.name() + " dim " + std::to_string(L.dim()) + ">"; });

    m.def("from_dump", [](const std::string& text) {
        std::istringstream in(text);
        return read_dump(in);
    });
    m.def("chevalley", [](const std::string& type, int p) { return build_g(type, p)->algebra; }, py::arg("type"), py::arg("p"));
    m.def("family", &build_family, py::arg("family"), py::arg("m") = 1, py::arg("n") = std::vector<int>{1}, py::arg("p") = 5);

    m.def("rank", [](const IntRows& rows, int p) { return rank(to_matrix(rows, p)); });
    m.def("rref", [](const IntRows& rows, int p) { return rows_of(rref(to_matrix(rows, p))); });
    m.def("kernel", [](const IntRows& rows, int p) { return rows_of(kernel(to_matrix(rows, p)).basis()); });
    m.def("lucas_binom", [](std::uint64_t a, std::uint64_t b, int p) { return lucas_binom(a, b, p); });

    m.def("census", [](const std::string& type, int p, int d) { return report(run_census(type, p, d)); },
          py::arg("type"), py::arg("p"), py::arg("d") = 0);
    m.def("verify_e8_w", [](std::uint64_t seed) { return report(verify_e8_w(seed)); }, py::arg("seed") = kDefaultModuleSeed);
    m.def("verify_g2_w", [](std::uint64_t seed) { return report(verify_g2_w(seed)); }, py::arg("seed") = kDefaultModuleSeed);
    m.def("verify_cartan", [](std::uint64_t seed) { return report(verify_cartan_identities(seed)); },
          py::arg("seed") = kDefaultModuleSeed);
    m.def("filtration",
          [](const std::string& ambient, const std::string& sub, std::uint64_t seed) {
              return report(run_filtration({ambient, sub, seed}));
          },
          py::arg("ambient"), py::arg("sub"), py::arg("seed") = kDefaultModuleSeed);
}
