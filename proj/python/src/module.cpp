#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trigon/io.hpp"

namespace py = pybind11;
using namespace trigon;

namespace {

// Results are built as json by the shared serialisers and handed over as
// plain dicts and lists.
py::object to_python(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(to_python(v));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
            return out;
        }
        default: throw py::type_error("unsupported json value");
    }
}

GeometryKind geometry_of(const std::string& text) {
    if (auto g = parse_geometry(text)) return *g;
    throw Error(ErrorCode::InvalidArgument, "unknown geometry '" + text + "'");
}

ChainId chain_of(const std::string& key) {
    if (auto c = parse_chain_id(key)) return *c;
    throw Error(ErrorCode::InvalidArgument, "unknown chain '" + key + "'");
}

GeometryKind resolve(ChainId chain, const std::optional<std::string>& geometry) {
    const GeometryKind kind = geometry ? geometry_of(*geometry) : default_geometry(chain);
    require_kind(chain, kind);
    return kind;
}

Box box_of(GeometryKind kind, const std::array<std::array<double, 2>, 3>& ranges) {
    Box box{kind, {}};
    for (std::size_t k = 0; k < 3; ++k) box.sides[k] = {ranges[k][0], ranges[k][1]};
    return box;
}

}  // namespace

PYBIND11_MODULE(_trigon, m) {
    m.doc() = "Strengthened Euler inequalities in Euclidean, spherical and hyperbolic geometry";

    // Lives as long as the interpreter; never released.
    static py::handle error_type = py::exception<Error>(m, "TrigonError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = error_type(e.what());
            inst.attr("code") = std::string(to_string(e.code()));  // e.g. "KindMismatch"
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    m.def("chains", [] {
        py::list out;
        for (const auto& info : all_chains()) out.append(std::string(info.key));
        return out;
    });

    m.def("s_value", [](const std::string& geometry, double x) { return s_value(geometry_of(geometry), x); },
          py::arg("geometry"), py::arg("x"));

    m.def(
        "triangle",
        [](const std::string& geometry, double a, double b, double c) {
            const Triangle t = validate_triangle(geometry_of(geometry), a, b, c);
            return to_python(to_json(core_quantities(t), t));
        },
        py::arg("geometry"), py::arg("a"), py::arg("b"), py::arg("c"),
        "Core quantities: s-values, B, B-bar, Euler ratio and both radii.");

    m.def(
        "evaluate_chain",
        [](const std::string& chain, std::array<double, 3> sides, std::optional<std::string> geometry, double tol) {
            const ChainId id = chain_of(chain);
            const Triangle t = validate_triangle(resolve(id, geometry), sides[0], sides[1], sides[2]);
            return to_python(to_json(evaluate_chain(id, t, tol)));
        },
        py::arg("chain"), py::arg("sides"), py::arg("geometry") = py::none(),
        py::arg("tol") = kDefaultChainTolerance);

    m.def(
        "gap",
        [](const std::string& chain, std::size_t i, std::size_t j, std::array<double, 3> sides,
           std::optional<std::string> geometry) {
            const ChainId id = chain_of(chain);
            return gap_value(id, i, j, validate_triangle(resolve(id, geometry), sides[0], sides[1], sides[2]));
        },
        py::arg("chain"), py::arg("i"), py::arg("j"), py::arg("sides"), py::arg("geometry") = py::none());

    m.def(
        "oracle",
        [](const std::string& geometry, std::array<double, 3> sides) {
            return to_python(oracle_report(validate_triangle(geometry_of(geometry), sides[0], sides[1], sides[2])));
        },
        py::arg("geometry"), py::arg("sides"));

    m.def(
        "certify",
        [](const std::string& chain, std::size_t i, std::size_t j, std::array<std::array<double, 2>, 3> box,
           std::optional<std::string> geometry, double tol, std::size_t max_boxes, int max_depth, unsigned threads) {
            const ChainId id = chain_of(chain);
            CertifyOptions opts;
            opts.tol = tol;
            opts.max_boxes = max_boxes;
            opts.max_depth = max_depth;
            opts.threads = threads;
            const Box b = box_of(resolve(id, geometry), box);
            const Certificate c = [&] {
                py::gil_scoped_release release;
                return certify_region(id, i, j, b, opts);
            }();
            return to_python(to_json(c));
        },
        py::arg("chain"), py::arg("i"), py::arg("j"), py::arg("box"), py::arg("geometry") = py::none(),
        py::arg("tol") = CertifyOptions{}.tol, py::arg("max_boxes") = CertifyOptions{}.max_boxes,
        py::arg("max_depth") = CertifyOptions{}.max_depth, py::arg("threads") = 0u);

    m.def(
        "search",
        [](const std::string& chain, std::size_t i, std::size_t j, std::array<std::array<double, 2>, 3> box,
           std::optional<std::string> geometry, std::uint64_t seed, int grid_n, unsigned threads) {
            const ChainId id = chain_of(chain);
            SearchOptions opts;
            opts.seed = seed;
            opts.grid_n = grid_n;
            opts.threads = threads;
            const Box b = box_of(resolve(id, geometry), box);
            const SearchResult r = [&] {
                py::gil_scoped_release release;
                return minimize_gap(id, i, j, b, opts);
            }();
            return to_python(to_json(r));
        },
        py::arg("chain"), py::arg("i"), py::arg("j"), py::arg("box"), py::arg("geometry") = py::none(),
        py::arg("seed") = 0, py::arg("grid_n") = SearchOptions{}.grid_n, py::arg("threads") = 0u);

    m.def(
        "compare",
        [](const std::string& chain, std::size_t i, std::size_t j, std::array<std::array<double, 2>, 3> box,
           std::optional<std::string> geometry, std::uint64_t seed, int grid_n) {
            const ChainId id = chain_of(chain);
            SearchOptions opts;
            opts.seed = seed;
            opts.grid_n = grid_n;
            const Box b = box_of(resolve(id, geometry), box);
            const Comparability c = [&] {
                py::gil_scoped_release release;
                return comparability_scan(id, i, j, b, opts);
            }();
            return to_python(to_json(c));
        },
        py::arg("chain"), py::arg("i"), py::arg("j"), py::arg("box"), py::arg("geometry") = py::none(),
        py::arg("seed") = 0, py::arg("grid_n") = SearchOptions{}.grid_n);

    m.def("repro", [] {
        py::list out;
        for (const auto& row : run_repro()) out.append(to_python(to_json(row)));
        return out;
    });
}
