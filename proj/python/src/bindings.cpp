#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "dlbf/analysis.hpp"
#include "dlbf/deletable_bloom_filter.hpp"
#include "dlbf/errors.hpp"
#include "dlbf/figures.hpp"
#include "dlbf/hashing.hpp"
#include "dlbf/reference_oracle.hpp"
#include "dlbf/serialization.hpp"
#include "dlbf/simulation.hpp"
#include "dlbf/standard_bloom_filter.hpp"
#include "dlbf/table.hpp"

namespace py = pybind11;

namespace {

py::object cell_to_py(const dlbf::Cell& cell) {
  if (const auto* u = std::get_if<std::uint64_t>(&cell)) return py::int_(*u);
  if (const auto* d = std::get_if<double>(&cell)) return py::float_(*d);
  return py::none();
}

py::list table_to_py(const dlbf::Table& table) {
  py::list rows;
  for (const auto& row : table.rows) {
    py::dict obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[py::str(table.columns[c])] = cell_to_py(row[c]);
    rows.append(obj);
  }
  return rows;
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
  return {reinterpret_cast<const char*>(v.data()), v.size()};
}

py::list bits_to_list(const dlbf::BitArray& bits) {
  py::list out;
  for (std::size_t i = 0; i < bits.size(); ++i) out.append(bits.test(i));
  return out;
}

dlbf::sim::ExperimentConfig make_config(std::uint32_t m, std::uint32_t r, std::uint32_t k,
                                        std::uint32_t n, std::uint32_t trials,
                                        std::uint32_t probes, std::uint64_t seed,
                                        std::uint64_t hash_seed,
                                        const std::optional<std::filesystem::path>& wordlist,
                                        unsigned threads) {
  dlbf::sim::ExperimentConfig c;
  c.params = {m, r, k, hash_seed};
  c.n = n;
  c.trials = trials;
  c.probes = probes;
  c.master_seed = seed;
  c.threads = threads;
  if (wordlist) c.source = dlbf::sim::WordlistSource::load(*wordlist);
  return c;
}

py::dict summary_to_py(const dlbf::sim::MetricSummary& s) {
  py::dict d;
  d["mean"] = s.mean;
  d["std"] = s.stddev;
  d["ci95"] = s.ci95;
  return d;
}

py::dict aggregate_to_py(const dlbf::sim::AggregateResult& a) {
  py::dict d;
  d["m"] = a.config.params.m;
  d["r"] = a.config.params.r;
  d["k"] = a.config.params.k;
  d["n"] = a.config.n;
  d["trials"] = a.config.trials;
  d["probes"] = a.config.probes;
  d["master_seed"] = a.config.master_seed;
  d["deletable"] = summary_to_py(a.deletable);
  d["bits_reset"] = summary_to_py(a.bits_reset);
  d["fpr_before"] = summary_to_py(a.fpr_before);
  d["fpr_after"] = summary_to_py(a.fpr_after);
  d["data_bits_set_before"] = summary_to_py(a.data_bits_set_before);
  d["bitmap_saturation"] = summary_to_py(a.bitmap_saturation);
  return d;
}

#define DLBF_EXPERIMENT_ARGS                                                            \
  py::kw_only(), py::arg("m") = 240, py::arg("r") = 24, py::arg("k") = 5, py::arg("n") = 22, \
      py::arg("trials") = 2000, py::arg("probes") = 500, py::arg("seed") = 42,          \
      py::arg("hash_seed") = 42, py::arg("wordlist") = py::none(), py::arg("threads") = 0

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deletable Bloom filter: data structure, closed-form model and simulator";

  auto error = py::register_exception<dlbf::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<dlbf::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<dlbf::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<dlbf::ContractError>(m, "ContractError", PyExc_IndexError);
  py::register_exception<dlbf::ParseError>(m, "ParseError", error.ptr());

  py::class_<dlbf::FilterParams>(m, "FilterParams")
      .def(py::init([](std::uint32_t m_, std::uint32_t r, std::uint32_t k, std::uint64_t seed) {
             dlbf::FilterParams p{m_, r, k, seed};
             p.validate();
             return p;
           }),
           py::arg("m"), py::arg("r"), py::arg("k"), py::arg("seed") = 0)
      .def_readonly("m", &dlbf::FilterParams::m)
      .def_readonly("r", &dlbf::FilterParams::r)
      .def_readonly("k", &dlbf::FilterParams::k)
      .def_readonly("seed", &dlbf::FilterParams::seed)
      .def_property_readonly("data_bits", &dlbf::FilterParams::data_bits)
      .def_property_readonly("region_width", &dlbf::FilterParams::region_width)
      .def_property_readonly("satisfies_model_assumption",
                             &dlbf::FilterParams::satisfies_model_assumption)
      .def("__eq__", [](const dlbf::FilterParams& a, const dlbf::FilterParams& b) { return a == b; })
      .def("__repr__", [](const dlbf::FilterParams& p) { return "FilterParams(" + p.to_string() + ")"; });

  py::enum_<dlbf::RemoveOutcome>(m, "RemoveOutcome")
      .value("Deleted", dlbf::RemoveOutcome::kDeleted)
      .value("NotDeletable", dlbf::RemoveOutcome::kNotDeletable)
      .value("NotPresent", dlbf::RemoveOutcome::kNotPresent);

  py::class_<dlbf::DeletableBloomFilter>(m, "DeletableBloomFilter")
      .def(py::init<const dlbf::FilterParams&>(), py::arg("params"))
      .def(py::init([](std::uint32_t m_, std::uint32_t r, std::uint32_t k, std::uint64_t seed) {
             return dlbf::DeletableBloomFilter({m_, r, k, seed});
           }),
           py::kw_only(), py::arg("m"), py::arg("r"), py::arg("k"), py::arg("seed") = 0)
      .def("insert", &dlbf::DeletableBloomFilter::insert, py::arg("element"))
      .def("query", &dlbf::DeletableBloomFilter::contains, py::arg("element"))
      .def("__contains__", &dlbf::DeletableBloomFilter::contains)
      .def("remove", &dlbf::DeletableBloomFilter::remove, py::arg("element"))
      .def("indices", &dlbf::DeletableBloomFilter::indices, py::arg("element"))
      .def("region_of", &dlbf::DeletableBloomFilter::region_of, py::arg("index"))
      .def("bit_counts",
           [](const dlbf::DeletableBloomFilter& f) {
             const auto c = f.bit_counts();
             return py::make_tuple(c.data_bits_set, c.bitmap_bits_set);
           })
      .def_property_readonly("params", &dlbf::DeletableBloomFilter::params)
      .def_property_readonly("collision_bitmap",
                             [](const dlbf::DeletableBloomFilter& f) { return bits_to_list(f.collision_bitmap()); })
      .def_property_readonly("data_bits",
                             [](const dlbf::DeletableBloomFilter& f) { return bits_to_list(f.data_bits()); })
      .def("serialize", [](const dlbf::DeletableBloomFilter& f) { return to_bytes(dlbf::serialize(f)); })
      .def_static("deserialize",
                  [](const py::bytes& data) {
                    const std::string raw = data;
                    const std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
                    return dlbf::deserialize(bytes);
                  },
                  py::arg("data"))
      .def("save", [](const dlbf::DeletableBloomFilter& f, const std::filesystem::path& p) {
             dlbf::save_filter(p, f);
           })
      .def_static("load", &dlbf::load_filter, py::arg("path"))
      .def("__eq__", [](const dlbf::DeletableBloomFilter& a, const dlbf::DeletableBloomFilter& b) {
        return a == b;
      });

  py::class_<dlbf::StandardBloomFilter>(m, "StandardBloomFilter")
      .def(py::init<std::uint32_t, std::uint32_t, std::uint64_t>(), py::kw_only(), py::arg("m"),
           py::arg("k"), py::arg("seed") = 0)
      .def("insert", &dlbf::StandardBloomFilter::insert, py::arg("element"))
      .def("query", &dlbf::StandardBloomFilter::contains, py::arg("element"))
      .def("__contains__", &dlbf::StandardBloomFilter::contains);

  py::class_<dlbf::ReferenceOracle>(m, "ReferenceOracle")
      .def(py::init<const dlbf::FilterParams&>(), py::arg("params"))
      .def("insert", &dlbf::ReferenceOracle::insert)
      .def("classify", &dlbf::ReferenceOracle::classify)
      .def_property_readonly("counters", &dlbf::ReferenceOracle::counters)
      .def_property_readonly("marked_regions", &dlbf::ReferenceOracle::marked_regions);

  m.def("index_set", &dlbf::index_set, py::arg("element"), py::arg("seed"), py::arg("range"),
        py::arg("k"));

  // Closed-form model.
  m.def("cell_probabilities",
        [](std::uint64_t m_prime, std::uint32_t k, std::uint64_t n) {
          const auto c = dlbf::analysis::cell_probabilities(m_prime, k, n);
          return py::make_tuple(c.p0, c.p1, c.pc);
        },
        py::arg("m_prime"), py::arg("k"), py::arg("n"));
  m.def("deletability_probability",
        [](std::uint32_t m_, std::uint32_t r, std::uint32_t k, std::uint64_t n) {
          return dlbf::analysis::deletability_probability({m_, r, k, n});
        },
        py::kw_only(), py::arg("m"), py::arg("r"), py::arg("k"), py::arg("n"));
  m.def("fpr_dlbf",
        [](std::uint32_t m_, std::uint32_t r, std::uint32_t k, std::uint64_t n) {
          return dlbf::analysis::fpr_dlbf({m_, r, k, n});
        },
        py::kw_only(), py::arg("m"), py::arg("r"), py::arg("k"), py::arg("n"));
  m.def("fpr_sbf", &dlbf::analysis::fpr_sbf, py::kw_only(), py::arg("m"), py::arg("k"), py::arg("n"));
  m.def("model",
        [](std::uint32_t m_, std::uint32_t r, std::uint32_t k, std::uint64_t n) {
          const auto p = dlbf::analysis::evaluate({m_, r, k, n});
          py::list rows = table_to_py(dlbf::model_table({&p, 1}));
          return py::dict(rows[0]);
        },
        py::kw_only(), py::arg("m"), py::arg("r"), py::arg("k"), py::arg("n"));
  m.def("deletability_curve",
        [](std::uint32_t m_, const std::vector<double>& ratios, std::uint32_t k,
           const std::vector<double>& densities) {
          return table_to_py(dlbf::model_table(dlbf::analysis::deletability_curve(m_, ratios, k, densities)));
        },
        py::kw_only(), py::arg("m"), py::arg("ratios"), py::arg("k"), py::arg("densities"));

  // Simulation.
  m.def("run_experiment",
        [](std::uint32_t m_, std::uint32_t r, std::uint32_t k, std::uint32_t n, std::uint32_t trials,
           std::uint32_t probes, std::uint64_t seed, std::uint64_t hash_seed,
           const std::optional<std::filesystem::path>& wordlist, unsigned threads) {
          const auto c = make_config(m_, r, k, n, trials, probes, seed, hash_seed, wordlist, threads);
          dlbf::sim::AggregateResult result;
          {
            py::gil_scoped_release release;
            result = dlbf::sim::run_experiment(c);
          }
          return aggregate_to_py(result);
        },
        DLBF_EXPERIMENT_ARGS);
  m.def("run_sbf_baseline",
        [](std::uint32_t m_, std::uint32_t r, std::uint32_t k, std::uint32_t n, std::uint32_t trials,
           std::uint32_t probes, std::uint64_t seed, std::uint64_t hash_seed,
           const std::optional<std::filesystem::path>& wordlist, unsigned threads) {
          const auto c = make_config(m_, r, k, n, trials, probes, seed, hash_seed, wordlist, threads);
          dlbf::sim::AggregateResult result;
          {
            py::gil_scoped_release release;
            result = dlbf::sim::run_sbf_baseline(c);
          }
          return aggregate_to_py(result);
        },
        DLBF_EXPERIMENT_ARGS);
  m.def("generate_elements",
        [](std::size_t count, std::uint64_t seed, const std::optional<std::filesystem::path>& wordlist) {
          dlbf::sim::ElementSource source = dlbf::sim::SyntheticSource{};
          if (wordlist) source = dlbf::sim::WordlistSource::load(*wordlist);
          return dlbf::sim::generate_elements(source, count, seed);
        },
        py::arg("count"), py::arg("seed"), py::arg("wordlist") = py::none());
  m.def("figure_dataset",
        [](const std::string& id, std::optional<std::uint32_t> trials, std::optional<std::uint64_t> seed,
           std::vector<std::uint32_t> n_values, std::vector<std::uint32_t> r_values, unsigned threads) {
          dlbf::sim::FigureOverrides o;
          o.trials = trials;
          o.seed = seed;
          o.n_values = std::move(n_values);
          o.r_values = std::move(r_values);
          o.threads = threads;
          const auto which = dlbf::sim::parse_figure_id(id);
          dlbf::Table table;
          {
            py::gil_scoped_release release;
            table = dlbf::sim::figure_dataset(which, o);
          }
          return table_to_py(table);
        },
        py::arg("id"), py::kw_only(), py::arg("trials") = py::none(), py::arg("seed") = py::none(),
        py::arg("n_values") = std::vector<std::uint32_t>{}, py::arg("r_values") = std::vector<std::uint32_t>{},
        py::arg("threads") = 0);
}
