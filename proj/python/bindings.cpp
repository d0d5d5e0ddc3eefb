// Python bindings for the steering toolkit. Thin pass-through: every bound
// name maps to one library call, conversions limited to nested lists for
// matrices and tuples/structs for small aggregates.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "steerkit/criteria.hpp"
#include "steerkit/errors.hpp"
#include "steerkit/keyrate.hpp"
#include "steerkit/measure.hpp"
#include "steerkit/optimizer.hpp"
#include "steerkit/qcore.hpp"
#include "steerkit/statezoo.hpp"
#include "steerkit/steering.hpp"

namespace py = pybind11;
using namespace steerkit;

namespace {

ComplexMatrix matrix_from_rows(const std::vector<std::vector<Complex>>& rows) {
    const int dim = static_cast<int>(rows.size());
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r) {
        if (static_cast<int>(rows[r].size()) != dim)
            throw std::invalid_argument("rows must form a square matrix");
        for (int c = 0; c < dim; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<std::vector<Complex>> rows_of(const ComplexMatrix& m) {
    std::vector<std::vector<Complex>> rows(m.dim(), std::vector<Complex>(m.dim()));
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) rows[r][c] = m.at(r, c);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Qubit steering toolkit: spin measurements, two-observable steering "
        "functionals and bounds, CHSH maxima, linear steering criteria, and "
        "one-way key-rate reports.";
    m.attr("__version__") = "0.1.0";

    py::register_exception<DegenerateConditionError>(m, "DegenerateConditionError",
                                                     PyExc_RuntimeError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<BlochVector>(m, "BlochVector", "Real 3-vector on or inside the Bloch ball.")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &BlochVector::x)
        .def_readwrite("y", &BlochVector::y)
        .def_readwrite("z", &BlochVector::z)
        .def("norm", &BlochVector::norm)
        .def("dot", &BlochVector::dot)
        .def("__repr__", [](const BlochVector& v) {
            std::ostringstream os;
            os << "BlochVector(" << v.x << ", " << v.y << ", " << v.z << ")";
            return os.str();
        });

    py::class_<Direction>(m, "Direction",
                          "Measurement axis, theta in [0, pi], phi wrapped to [0, 2 pi).")
        .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
        .def_static("z_axis", &Direction::z_axis)
        .def_static("x_axis", &Direction::x_axis)
        .def_static("y_axis", &Direction::y_axis)
        .def_static("from_unit", &Direction::from_unit, py::arg("v"))
        .def_property_readonly("theta", &Direction::theta)
        .def_property_readonly("phi", &Direction::phi)
        .def_property_readonly("unit", &Direction::unit)
        .def("__repr__", [](const Direction& d) {
            std::ostringstream os;
            os << "Direction(theta=" << d.theta() << ", phi=" << d.phi() << ")";
            return os.str();
        });

    py::enum_<Outcome>(m, "Outcome", "Spin outcome: Up is the +1 eigenvalue.")
        .value("Up", Outcome::Up)
        .value("Down", Outcome::Down);

    py::class_<DensityMatrix>(m, "DensityMatrix",
                              "Validated state: Hermitian, unit trace, positive semidefinite.")
        .def(py::init([](const std::vector<std::vector<Complex>>& rows) {
                 return DensityMatrix(matrix_from_rows(rows));
             }),
             py::arg("rows"))
        .def_property_readonly("dim", &DensityMatrix::dim)
        .def("rows", [](const DensityMatrix& rho) { return rows_of(rho.matrix()); },
             "Matrix entries as a nested list, row major.");

    py::class_<PureState>(m, "PureState", "Normalized state vector.")
        .def(py::init([](std::vector<Complex> amps) {
                 const int dim = static_cast<int>(amps.size());
                 return PureState(dim, std::move(amps));
             }),
             py::arg("amplitudes"))
        .def_property_readonly("dim", &PureState::dim)
        .def_property_readonly("amplitudes", &PureState::amplitudes)
        .def("to_density", &PureState::to_density);

    // state factories
    m.def("bell_phi_plus", &bell_phi_plus, "(|00> + |11>)/sqrt(2).");
    m.def("werner", &werner, py::arg("p"), "p |Phi+><Phi+| + (1 - p) I/4.");
    m.def("pure_alpha", &pure_alpha, py::arg("alpha"), "sqrt(alpha)|00> + sqrt(1 - alpha)|11>.");
    py::enum_<TripartiteKind>(m, "TripartiteKind")
        .value("Ghz", TripartiteKind::Ghz)
        .value("W", TripartiteKind::W)
        .value("ProductExtension", TripartiteKind::ProductExtension)
        .value("RandomPure", TripartiteKind::RandomPure);
    m.def("tripartite_family", &tripartite_family, py::arg("kind"),
          py::arg("seed") = std::optional<std::uint64_t>{}, py::arg("alpha") = 0.5,
          "Three-qubit test states; RandomPure requires a seed.");
    m.def("negativity", &negativity, py::arg("rho"),
          "Sum of |negative eigenvalues| of the partial transpose; positive iff entangled "
          "for two qubits.");

    // state plumbing
    m.def("partial_trace",
          [](const DensityMatrix& rho, const std::vector<int>& dims, const std::vector<int>& keep) {
              return partial_trace(rho, dims, keep);
          },
          py::arg("rho"), py::arg("dims"), py::arg("keep"),
          "Trace out the parties not listed in keep.");
    m.def("bloch_of", &bloch_of, py::arg("rho"), "Bloch vector of a qubit state.");
    m.def("bloch_to_state", &bloch_to_state, py::arg("n"), "(I + n.sigma)/2.");

    // measurements
    py::class_<MeasurementLayout>(m, "MeasurementLayout",
                                  "Which party measures along which axis; None = unmeasured.")
        .def(py::init<std::vector<std::optional<Direction>>>(), py::arg("parties"))
        .def_static("single", &MeasurementLayout::single, py::arg("n_parties"), py::arg("party"),
                    py::arg("direction"))
        .def_static("two", &MeasurementLayout::two, py::arg("n_parties"), py::arg("party_a"),
                    py::arg("direction_a"), py::arg("party_b"), py::arg("direction_b"))
        .def_property_readonly("n_parties", &MeasurementLayout::n_parties)
        .def_property_readonly("n_measured", &MeasurementLayout::n_measured);
    m.def("joint_prob", &joint_prob, py::arg("rho"), py::arg("layout"), py::arg("outcomes"),
          "P(outcomes | layout), clamped to [0, 1].");
    m.def("conditional_prob", &conditional_prob, py::arg("rho"), py::arg("cond_party"),
          py::arg("cond_dir"), py::arg("cond_out"), py::arg("target_party"), py::arg("target_dir"),
          py::arg("target_out"),
          "P(target | condition); raises DegenerateConditionError on a zero-weight condition.");

    // steering functionals and bounds
    m.def("fur_max_value", &fur_max_value,
          "Largest equal-weight two-observable game value of any qubit state.");
    m.def("scenario1_bound", &scenario1_bound, "Deterministic-strategy bound, 1 + 1/sqrt(2).");
    m.def("scenario2_bound", &scenario2_bound, "Random-second-observable bound, 3/2.");

    py::class_<SteeringSetting>(m, "SteeringSetting",
                                "One steering round; Bob's axes must be orthogonal.")
        .def(py::init<Direction, Direction, Direction, Direction, Outcome, Outcome>(),
             py::arg("alice_s"), py::arg("alice_t"), py::arg("bob_p"), py::arg("bob_q"),
             py::arg("outcome_a") = Outcome::Up, py::arg("outcome_b") = Outcome::Up)
        .def_readonly("alice_s", &SteeringSetting::alice_s)
        .def_readonly("alice_t", &SteeringSetting::alice_t)
        .def_readonly("bob_p", &SteeringSetting::bob_p)
        .def_readonly("bob_q", &SteeringSetting::bob_q);

    py::enum_<Scenario>(m, "Scenario")
        .value("I", Scenario::I)
        .value("II", Scenario::II);

    py::class_<SteeringVerdict>(m, "SteeringVerdict")
        .def_readonly("functional_value", &SteeringVerdict::functional_value)
        .def_readonly("bound", &SteeringVerdict::bound)
        .def_readonly("scenario", &SteeringVerdict::scenario)
        .def_readonly("steerable", &SteeringVerdict::steerable)
        .def_readonly("margin", &SteeringVerdict::margin)
        .def("__repr__", [](const SteeringVerdict& v) {
            std::ostringstream os;
            os << "SteeringVerdict(functional_value=" << v.functional_value
               << ", bound=" << v.bound << ", steerable=" << (v.steerable ? "True" : "False")
               << ")";
            return os.str();
        });

    py::class_<FurGameMax>(m, "FurGameMax")
        .def_readonly("value", &FurGameMax::value)
        .def_readonly("maximizer", &FurGameMax::maximizer);

    m.def("fur_game_value", &fur_game_value, py::arg("rho"), py::arg("p"), py::arg("q"),
          py::arg("win") = Outcome::Up,
          "Equal-weight two-observable game value of a qubit state.");
    m.def("fur_game_max", &fur_game_max, py::arg("p"), py::arg("q"), py::arg("win") = Outcome::Up,
          "Closed-form maximum of the game value over all qubit states.");
    m.def("steering_functional", &steering_functional, py::arg("rho"), py::arg("setting"),
          "P(b along p | a along s) + P(b along q | a along t).");
    m.def("scenario2_average", &scenario2_average, py::arg("n"), py::arg("p"),
          "Game value averaged over a uniform second observable: (2 + n.p)/4.");
    m.def("scenario2_average_mc", &scenario2_average_mc, py::arg("n"), py::arg("p"),
          py::arg("samples"), py::arg("seed"), "Seeded Monte Carlo estimate of the average.");
    m.def("verdict", &verdict, py::arg("rho"), py::arg("setting"), py::arg("scenario"),
          py::arg("slack") = VERDICT_SLACK, "Steerable iff functional > bound + slack.");

    py::class_<FunctionalMax>(m, "FunctionalMax")
        .def_readonly("value", &FunctionalMax::value)
        .def_readonly("alice_s", &FunctionalMax::alice_s)
        .def_readonly("alice_t", &FunctionalMax::alice_t)
        .def_readonly("evaluations", &FunctionalMax::evaluations);
    m.def("steering_functional_max", &steering_functional_max, py::arg("rho"), py::arg("bob_p"),
          py::arg("bob_q"), py::arg("outcome_a") = Outcome::Up, py::arg("outcome_b") = Outcome::Up,
          py::arg("grid_step") = OPT_DEFAULT_GRID_STEP,
          py::arg("refine_iters") = OPT_DEFAULT_REFINE_ITERS,
          "Maximum of the functional over Alice's two axes (independent searches).");

    // optimizer
    py::class_<OptResult>(m, "OptResult")
        .def_readonly("best_value", &OptResult::best_value)
        .def_readonly("best_directions", &OptResult::best_directions)
        .def_readonly("evaluations", &OptResult::evaluations);
    m.def("maximize_over_directions", &maximize_over_directions, py::arg("objective"),
          py::arg("k"), py::arg("grid_step") = OPT_DEFAULT_GRID_STEP,
          py::arg("refine_iters") = OPT_DEFAULT_REFINE_ITERS,
          "Deterministic grid + refinement maximization over k directions; the objective "
          "receives a list of Direction.");
    m.attr("OPT_DEFAULT_GRID_STEP") = OPT_DEFAULT_GRID_STEP;
    m.attr("OPT_DEFAULT_REFINE_ITERS") = OPT_DEFAULT_REFINE_ITERS;

    // CHSH and linear criteria
    m.def("correlation_matrix", &correlation_matrix, py::arg("rho"),
          "T_ij = Re tr(rho sigma_i x sigma_j).");
    m.def("chsh_max", &chsh_max, py::arg("rho"),
          "Largest CHSH value over projective measurements: 2 sqrt(t1 + t2).");
    py::class_<MeasurementSet>(m, "MeasurementSet",
                               "At least two pairwise-distinct measurement axes.")
        .def(py::init<std::vector<Direction>>(), py::arg("directions"))
        .def_property_readonly("size", &MeasurementSet::size)
        .def_property_readonly("directions", &MeasurementSet::directions);
    m.def("saunders_bound", &saunders_bound, py::arg("set"),
          "Linear steering threshold for the given axes.");
    m.def("saunders_lhs", &saunders_lhs, py::arg("rho"), py::arg("set"),
          "Value of the linear steering functional with correlated partner axes.");

    // tripartite rounds and key rates
    py::class_<TripartiteSetting>(m, "TripartiteSetting",
                                  "Axes and accepted outcomes for a three-party round.")
        .def(py::init<Direction, Direction, Direction, Direction, Direction, Direction, Outcome,
                      Outcome, Outcome>(),
             py::arg("alice_s"), py::arg("alice_t"), py::arg("bob_p"), py::arg("bob_q"),
             py::arg("charlie_s"), py::arg("charlie_t"), py::arg("a") = Outcome::Up,
             py::arg("b") = Outcome::Up, py::arg("c") = Outcome::Up);

    py::class_<TPair>(m, "TPair")
        .def_readonly("t_ab", &TPair::t_ab)
        .def_readonly("t_bc", &TPair::t_bc);
    m.def("t_pair", &t_pair, py::arg("rho"), py::arg("setting"),
          "The two conditional-pair sums P(b|a)+P(b|a') and P(b|c)+P(b|c').");

    py::class_<MonogamyResult>(m, "MonogamyResult")
        .def_readonly("t_ab", &MonogamyResult::t_ab)
        .def_readonly("t_bc", &MonogamyResult::t_bc)
        .def_readonly("average", &MonogamyResult::average)
        .def_readonly("satisfied", &MonogamyResult::satisfied);
    m.def("monogamy_check", &monogamy_check, py::arg("rho"), py::arg("setting"),
          "Average of the two pair sums against the shared bound 1 + 1/sqrt(2).");

    py::class_<OptimizedTPair>(m, "OptimizedTPair")
        .def_readonly("value", &OptimizedTPair::value)
        .def_readonly("alice_s", &OptimizedTPair::alice_s)
        .def_readonly("alice_t", &OptimizedTPair::alice_t)
        .def_readonly("charlie_s", &OptimizedTPair::charlie_s)
        .def_readonly("charlie_t", &OptimizedTPair::charlie_t);
    m.def("optimize_t_pair", &optimize_t_pair, py::arg("rho"), py::arg("bob_p"), py::arg("bob_q"),
          py::arg("a") = Outcome::Up, py::arg("b") = Outcome::Up, py::arg("c") = Outcome::Up,
          py::arg("grid_step") = OPT_DEFAULT_GRID_STEP,
          py::arg("refine_iters") = OPT_DEFAULT_REFINE_ITERS,
          "Maximize the four conditional terms independently over Alice and Charlie axes.");

    m.def("mutual_information", &mutual_information, py::arg("joint"),
          "Mutual information in bits of a 2x2 joint table.");
    m.def("joint_table_ab", &joint_table_ab, py::arg("rho"), py::arg("setting"),
          "Sifted-round joint distribution of Bob and Alice.");
    m.def("joint_table_cb", &joint_table_cb, py::arg("rho"), py::arg("setting"),
          "Sifted-round joint distribution of Bob and Charlie.");
    m.def("key_rate_exact", &key_rate_exact, py::arg("rho"), py::arg("setting"),
          "One-way rate I(B:A) - I(B:C).");

    py::class_<KeyRateBounds>(m, "KeyRateBounds")
        .def_readonly("logratio_bits", &KeyRateBounds::logratio_bits)
        .def_readonly("linear_bits", &KeyRateBounds::linear_bits);
    m.def("key_rate_bounds", &key_rate_bounds, py::arg("k"),
          "Violation-strength bounds; requires 0 <= k < fur_max_value().");

    py::class_<KeyRateReport>(m, "KeyRateReport")
        .def_readonly("t_ab", &KeyRateReport::t_ab)
        .def_readonly("t_bc", &KeyRateReport::t_bc)
        .def_readonly("k_violation", &KeyRateReport::k_violation)
        .def_readonly("i_ba", &KeyRateReport::i_ba)
        .def_readonly("i_bc", &KeyRateReport::i_bc)
        .def_readonly("rate_exact_bits", &KeyRateReport::rate_exact_bits)
        .def_readonly("rate_logratio_bits", &KeyRateReport::rate_logratio_bits)
        .def_readonly("rate_linear_bound_bits", &KeyRateReport::rate_linear_bound_bits);
    m.def("key_rate_report", &key_rate_report, py::arg("rho"), py::arg("setting"),
          "Full report; bound fields are NaN when there is no violation.");

    py::class_<WorstCaseCharlie>(m, "WorstCaseCharlie")
        .def_readonly("charlie_s", &WorstCaseCharlie::charlie_s)
        .def_readonly("charlie_t", &WorstCaseCharlie::charlie_t)
        .def_readonly("i_bc", &WorstCaseCharlie::i_bc);
    m.def("worst_case_charlie", &worst_case_charlie, py::arg("rho"), py::arg("setting"),
          py::arg("grid_step") = std::numbers::pi / 12.0,
          py::arg("refine_iters") = OPT_DEFAULT_REFINE_ITERS,
          "Grid-optimized third-party axes maximizing I(B:C); no global-optimality claim.");
}
