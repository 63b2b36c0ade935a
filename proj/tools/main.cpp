#include "CLI11.hpp"

#include "casimirt/classical_box.hpp"
#include "casimirt/constants.hpp"
#include "casimirt/errors.hpp"
#include "casimirt/expansion.hpp"
#include "casimirt/lattice.hpp"
#include "casimirt/matsubara.hpp"
#include "casimirt/orbits.hpp"
#include "casimirt/units.hpp"

#include <clocale>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace casimirt;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Cell {
  std::variant<double, std::string> v;
  Cell(double d) : v(d) {}
  Cell(std::string s) : v(std::move(s)) {}
  Cell(const char* s) : v(std::string(s)) {}
};

struct Document {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c.v)) return fmt17(std::get<double>(c.v));
  return std::get<std::string>(c.v);
}

void write_table(const Document& doc, std::ostream& os) {
  std::vector<size_t> width(doc.columns.size());
  for (size_t j = 0; j < doc.columns.size(); ++j)
    width[j] = doc.columns[j].size();
  std::vector<std::vector<std::string>> text;
  text.reserve(doc.rows.size());
  for (const auto& row : doc.rows) {
    std::vector<std::string> line;
    line.reserve(row.size());
    for (size_t j = 0; j < row.size(); ++j) {
      line.push_back(cell_text(row[j]));
      width[j] = std::max(width[j], line.back().size());
    }
    text.push_back(std::move(line));
  }
  const auto emit = [&](const std::vector<std::string>& line) {
    for (size_t j = 0; j < line.size(); ++j) {
      os << line[j];
      if (j + 1 < line.size())
        os << std::string(width[j] - line[j].size() + 2, ' ');
    }
    os << '\n';
  };
  emit(doc.columns);
  for (const auto& line : text) emit(line);
}

void write_csv(const Document& doc, std::ostream& os) {
  for (size_t j = 0; j < doc.columns.size(); ++j) {
    if (j) os << ',';
    os << doc.columns[j];
  }
  os << '\n';
  for (const auto& row : doc.rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << cell_text(row[j]);
    }
    os << '\n';
  }
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void write_json(const Document& doc, std::ostream& os) {
  os << "{\"command\":\"" << json_escape(doc.command) << "\",\"rows\":[";
  for (size_t i = 0; i < doc.rows.size(); ++i) {
    if (i) os << ',';
    os << '{';
    for (size_t j = 0; j < doc.rows[i].size(); ++j) {
      if (j) os << ',';
      os << '"' << json_escape(doc.columns[j]) << "\":";
      const Cell& c = doc.rows[i][j];
      if (std::holds_alternative<double>(c.v)) {
        const double d = std::get<double>(c.v);
        if (std::isfinite(d))
          os << fmt17(d);
        else
          os << "null";
      } else {
        os << '"' << json_escape(std::get<std::string>(c.v)) << '"';
      }
    }
    os << '}';
  }
  os << "]}\n";
}

struct OutputOptions {
  std::string format = "table";
  std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->default_str("table")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--out", opts.out_path, "write output to a file");
}

int emit(const Document& doc, const OutputOptions& opts) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!opts.out_path.empty()) {
    file.open(opts.out_path);
    if (!file) {
      std::cerr << "error: cannot open " << opts.out_path << " for writing\n";
      return 1;
    }
    os = &file;
  }
  if (opts.format == "csv")
    write_csv(doc, *os);
  else if (opts.format == "json")
    write_json(doc, *os);
  else
    write_table(doc, *os);
  return 0;
}

struct PointOptions {
  PlateGeometry geometry;
  std::string units = "natural";
  std::string field = "em";
  double tolerance = lattice::default_tolerance;
  bool serial = false;
  OutputOptions output;
};

void add_point_options(CLI::App* cmd, PointOptions& opts) {
  cmd->add_option("--l1", opts.geometry.l1, "transverse extent 1")
      ->default_val(1.0)
      ->check(CLI::PositiveNumber);
  cmd->add_option("--l2", opts.geometry.l2, "transverse extent 2")
      ->default_val(1.0)
      ->check(CLI::PositiveNumber);
  cmd->add_option("--l3", opts.geometry.l3, "plate separation")
      ->default_val(1.0)
      ->check(CLI::PositiveNumber);
  cmd->add_option("--temperature", opts.geometry.temperature, "temperature")
      ->default_val(0.0)
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--units", opts.units,
                  "unit system (natural: hbar = c = k_B = 1, lengths in "
                  "meters; si: J, m, K)")
      ->envname("CASIMIRT_UNITS")
      ->check(CLI::IsMember({"natural", "si"}));
  cmd->add_option("--field", opts.field, "field content")
      ->default_str("em")
      ->check(CLI::IsMember({"em", "scalar"}));
  cmd->add_option("--tolerance", opts.tolerance,
                  "absolute tolerance on the reduced quantities")
      ->default_val(lattice::default_tolerance)
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--serial", opts.serial, "disable the parallel kernels");
  add_output_options(cmd, opts.output);
}

UnitSystem units_from(const std::string& name) {
  return name == "si" ? UnitSystem::si() : UnitSystem::natural();
}

struct PointResult {
  DimensionlessState state;
  lattice::LatticeThermo reduced;
  lattice::PhysicalThermo physical;
  double field_scale = 1.0;
};

PointResult evaluate_point(const PointOptions& opts) {
  const auto units = units_from(opts.units);
  const auto field = opts.field == "scalar" ? lattice::FieldMode::scalar
                                            : lattice::FieldMode::em;
  const auto exec = opts.serial ? lattice::Execution::serial
                                : lattice::Execution::parallel;
  PointResult r;
  r.state = reduced_z(opts.geometry, units);
  r.reduced = lattice::reduced_thermo(r.state.z, opts.tolerance, exec);
  r.physical = lattice::physical_thermo(opts.geometry, units, opts.tolerance,
                                        field, exec);
  r.field_scale = opts.field == "scalar" ? 0.5 : 1.0;
  return r;
}

Document point_document(const std::string& command, const PointOptions& opts) {
  const auto r = evaluate_point(opts);
  Document doc;
  doc.command = command;
  const double s = r.field_scale;
  if (command == "free-energy") {
    doc.columns = {"z", "lT", "a_hat", "free_energy_per_area", "tail_bound",
                   "method"};
    doc.add_row({r.state.z, r.state.lT, s * r.reduced.reduced.a_hat,
                 r.physical.free_energy_per_area, s * r.reduced.bound_a,
                 method_name(r.physical.method)});
  } else if (command == "force") {
    doc.columns = {"z", "lT", "f_hat", "force_per_area", "tail_bound",
                   "method"};
    doc.add_row({r.state.z, r.state.lT, s * r.reduced.reduced.f_hat,
                 r.physical.force_per_area, s * r.reduced.bound_f,
                 method_name(r.physical.method)});
  } else if (command == "energy") {
    doc.columns = {"z", "lT", "e_hat", "energy_per_area", "tail_bound",
                   "method"};
    doc.add_row({r.state.z, r.state.lT, s * r.reduced.reduced.e_hat,
                 r.physical.energy_per_area, s * r.reduced.bound_e,
                 method_name(r.physical.method)});
  } else {
    doc.columns = {"z", "lT", "s_hat", "entropy_per_area", "tail_bound",
                   "method"};
    doc.add_row({r.state.z, r.state.lT, s * r.reduced.reduced.s_hat,
                 r.physical.entropy_per_area, s * r.reduced.bound_s,
                 method_name(r.physical.method)});
  }
  return doc;
}

Document matsubara_force_document(const PointOptions& opts) {
  const auto units = units_from(opts.units);
  const auto exec = opts.serial ? lattice::Execution::serial
                                : lattice::Execution::parallel;
  const auto state = reduced_z(opts.geometry, units);
  const auto reduced =
      matsubara::force_matsubara_reduced(state.z, opts.tolerance, exec);
  const auto physical =
      matsubara::force_matsubara(opts.geometry, units, opts.tolerance, exec);
  const double s = opts.field == "scalar" ? 0.5 : 1.0;
  Document doc;
  doc.command = "force";
  doc.columns = {"z", "lT", "f_hat", "force_per_area", "tail_bound", "method"};
  doc.add_row({state.z, state.lT, s * reduced.value, s * physical.value,
               s * reduced.tail_bound, method_name(reduced.method)});
  return doc;
}

struct ScanOptions {
  double zmin = 0.0;
  double zmax = 0.0;
  int points = 0;
  std::string spacing = "log";
  double tolerance = lattice::default_tolerance;
  bool serial = false;
  OutputOptions output;
};

std::vector<double> scan_grid(const ScanOptions& opts) {
  if (!(opts.zmin < opts.zmax))
    throw CLI::ValidationError("scan", "zmin must be less than zmax");
  if (opts.spacing == "log" && !(opts.zmin > 0.0))
    throw CLI::ValidationError("scan", "log spacing needs zmin > 0");
  if (opts.spacing == "linear" && !(opts.zmin >= 0.0))
    throw CLI::ValidationError("scan", "z cannot be negative");
  std::vector<double> grid(opts.points);
  const double n = opts.points - 1;
  for (int i = 0; i < opts.points; ++i) {
    if (opts.spacing == "log")
      grid[i] = opts.zmin * std::pow(opts.zmax / opts.zmin, i / n);
    else
      grid[i] = opts.zmin + (opts.zmax - opts.zmin) * (i / n);
  }
  return grid;
}

Document scan_document(const ScanOptions& opts) {
  const auto grid = scan_grid(opts);
  std::vector<lattice::LatticeThermo> results(grid.size());
  if (opts.serial) {
    for (size_t i = 0; i < grid.size(); ++i)
      results[i] = lattice::reduced_thermo(grid[i], opts.tolerance,
                                           lattice::Execution::serial);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < grid.size(); ++i)
      results[i] = lattice::reduced_thermo(grid[i], opts.tolerance,
                                           lattice::Execution::serial);
  }
  Document doc;
  doc.command = "scan";
  doc.columns = {"z", "a_hat", "f_hat", "e_hat", "s_hat", "method",
                 "tail_bound"};
  for (size_t i = 0; i < grid.size(); ++i) {
    const auto& t = results[i];
    const double bound = std::max({t.bound_a, t.bound_f, t.bound_e, t.bound_s});
    doc.add_row({grid[i], t.reduced.a_hat, t.reduced.f_hat, t.reduced.e_hat,
                 t.reduced.s_hat, method_name(t.method), bound});
  }
  return doc;
}

struct ExpansionsOptions {
  double z = 1.0;
  int order = 8;
  double tolerance = lattice::default_tolerance;
  OutputOptions output;
};

Document expansions_document(const ExpansionsOptions& opts) {
  const auto reference = lattice::reduced_thermo(opts.z, opts.tolerance);
  const auto high = expansion::a_hat_highT(opts.z, opts.order);
  const auto low = expansion::a_hat_lowT(opts.z, opts.order);
  Document doc;
  doc.command = "expansions";
  doc.columns = {"z",         "branch",          "order",
                 "a_hat",     "estimated_error", "lattice_a_hat",
                 "abs_diff"};
  const auto row = [&](const expansion::ExpansionResult& r) {
    doc.add_row({opts.z, expansion::regime_name(r.regime),
                 static_cast<double>(r.order), r.value, r.estimated_error,
                 reference.reduced.a_hat,
                 std::abs(r.value - reference.reduced.a_hat)});
  };
  row(high);
  row(low);
  return doc;
}

struct OrbitsOptions {
  double l3 = 1.0;
  double lT = 0.0;
  double max_length = 0.0;
  OutputOptions output;
};

Document orbits_document(const OrbitsOptions& opts) {
  std::vector<orbits::OrbitRecord> records;
  if (opts.lT > 0.0)
    records = orbits::cylinder_orbits(opts.l3, opts.lT, opts.max_length);
  else
    records = orbits::interval_orbits(opts.l3, opts.max_length);
  Document doc;
  doc.command = "orbits";
  doc.columns = {"n3", "nT", "length", "multiplicity"};
  for (const auto& r : records) {
    const double n3 = r.windings.at(0);
    const double nT = r.windings.size() > 1 ? r.windings.at(1) : 0.0;
    doc.add_row({n3, nT, r.length, static_cast<double>(r.multiplicity)});
  }
  return doc;
}

struct CheckRow {
  std::string name;
  double measured;
  double threshold;
};

Document check_document(const std::string& command,
                        const std::vector<CheckRow>& checks, int& status) {
  Document doc;
  doc.command = command;
  doc.columns = {"check", "measured", "threshold", "status"};
  for (const auto& c : checks) {
    const bool ok = c.measured <= c.threshold;
    if (!ok) status = 1;
    doc.add_row({c.name, c.measured, c.threshold, ok ? "pass" : "fail"});
  }
  return doc;
}

Document oracle_check_document(double tolerance, int& status) {
  std::vector<CheckRow> checks;

  const std::vector<double> grid = {0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0};
  std::vector<lattice::LatticeThermo> lat(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    lat[i] = lattice::reduced_thermo(grid[i], tolerance);

  double dev = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    const auto m = matsubara::force_matsubara_reduced(grid[i], tolerance);
    dev = std::max(dev, std::abs(m.value - lat[i].reduced.f_hat) /
                            std::abs(lat[i].reduced.f_hat));
  }
  checks.push_back({"matsubara_vs_lattice_force", dev, 1e-10});

  dev = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 2.0) continue;
    const auto e = expansion::a_hat_highT(grid[i], 8);
    dev = std::max(dev, std::abs(e.value - lat[i].reduced.a_hat));
  }
  checks.push_back({"expansion_highT_vs_lattice", dev, 1e-12});

  dev = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] > 0.5) continue;
    const auto e = expansion::a_hat_lowT(grid[i], 8);
    dev = std::max(dev, std::abs(e.value - lat[i].reduced.a_hat));
  }
  checks.push_back({"expansion_lowT_vs_lattice", dev, 1e-12});

  dev = 0.0;
  for (double zv : {0.1, 0.5, 2.0, 10.0}) {
    const auto d1 = lattice::delta_of_z(zv, tolerance);
    const auto d2 = lattice::delta_of_z(1.0 / zv, tolerance);
    dev = std::max(dev, std::abs(d1.value - d2.value));
  }
  checks.push_back({"delta_reflection", dev, 1e-10});

  return check_document("oracle-check", checks, status);
}

Document selftest_document(int& status) {
  std::vector<CheckRow> checks;

  const auto zero = lattice::reduced_thermo(0.0);
  checks.push_back({"zero_temperature_free_energy",
                    std::abs(zero.reduced.a_hat + constants::pi2 / 720.0),
                    1e-14});
  checks.push_back({"zero_temperature_entropy", std::abs(zero.reduced.s_hat),
                    0.0});

  const double lt300 = thermal_length(300.0, UnitSystem::si());
  checks.push_back(
      {"thermal_length_300K", std::abs(lt300 / 7.6e-6 - 1.0), 0.01});

  const auto theta = classical_box::theta_reflection(2.5, 24);
  checks.push_back(
      {"theta_reflection", std::abs(theta.lhs - theta.rhs), 1e-13});

  const double jq = matsubara::J_integral(1.0, matsubara::JMethod::quadrature);
  const double js = matsubara::J_integral(1.0, matsubara::JMethod::series);
  const double jc = matsubara::J_integral(1.0, matsubara::JMethod::closed);
  checks.push_back({"j_route_agreement",
                    std::max(std::abs(jq - jc), std::abs(js - jc)), 1e-9});

  const classical_box::BoxPartition partition{2.0, 0.7, 1.0};
  const auto quad =
      classical_box::classical_shift_quadrature(partition, 2000, 1e-12);
  const double closed = classical_box::classical_shift_closed(partition);
  checks.push_back({"classical_box_quadrature", std::abs(quad.value - closed),
                    1e-8});

  const auto matsu =
      matsubara::mode_free_energy_matsubara(1.3, 2.0, 10000, 0.9);
  const double exact = matsubara::mode_free_energy(1.3, 2.0) -
                       matsubara::mode_free_energy(0.9, 2.0);
  checks.push_back({"single_mode_matsubara", std::abs(matsu.value - exact),
                    1e-8});

  double worst_entropy = 0.0;
  double worst_force = -1.0;
  for (double zv : {0.25, 1.0, 4.0}) {
    const auto t = lattice::reduced_thermo(zv);
    worst_entropy = std::min(worst_entropy, t.reduced.s_hat);
    worst_force = std::max(worst_force, t.reduced.f_hat);
  }
  checks.push_back({"entropy_nonnegative", -worst_entropy, 0.0});
  checks.push_back({"force_attractive", worst_force, -1e-3});

  return check_document("selftest", checks, status);
}

struct ClassicalBoxOptions {
  classical_box::BoxPartition partition;
  int n_max = 4000;
  double quad_tolerance = 1e-12;
  OutputOptions output;
};

Document classical_box_document(const ClassicalBoxOptions& opts) {
  const double closed = classical_box::classical_shift_closed(opts.partition);
  const auto quad = classical_box::classical_shift_quadrature(
      opts.partition, opts.n_max, opts.quad_tolerance);
  Document doc;
  doc.command = "classical-box";
  doc.columns = {"L",     "l3",          "shift_closed", "shift_quadrature",
                 "error_estimate", "abs_diff"};
  doc.add_row({opts.partition.L, opts.partition.l3, closed, quad.value,
               quad.error_estimate, std::abs(quad.value - closed)});
  return doc;
}

} // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{
      "Thermodynamics of the ideal-plate Casimir effect: free energy, "
      "force, energy, and entropy at finite temperature"};
  app.require_subcommand(1);

  Document doc;
  OutputOptions* output = nullptr;
  int status = 0;

  PointOptions point[4];
  const char* point_names[4] = {"free-energy", "force", "entropy", "energy"};
  const char* point_help[4] = {
      "free energy per unit plate area",
      "force per unit plate area (negative means attraction)",
      "entropy per unit plate area",
      "interaction energy per unit plate area"};
  std::string force_method = "lattice";
  for (int i = 0; i < 4; ++i) {
    auto* cmd = app.add_subcommand(point_names[i], point_help[i]);
    add_point_options(cmd, point[i]);
    if (std::string(point_names[i]) == "force")
      cmd->add_option("--method", force_method, "evaluation route")
          ->default_str("lattice")
          ->check(CLI::IsMember({"lattice", "matsubara"}));
    cmd->callback([&, i] {
      output = &point[i].output;
      if (std::string(point_names[i]) == "force" &&
          force_method == "matsubara")
        doc = matsubara_force_document(point[i]);
      else
        doc = point_document(point_names[i], point[i]);
    });
  }

  ScanOptions scan;
  {
    auto* cmd = app.add_subcommand(
        "scan", "reduced thermodynamic quantities over a grid of z");
    cmd->add_option("--zmin", scan.zmin, "lower grid edge")->required();
    cmd->add_option("--zmax", scan.zmax, "upper grid edge")->required();
    cmd->add_option("--points", scan.points, "number of grid points")
        ->required()
        ->check(CLI::Range(2, 1000000));
    cmd->add_option("--spacing", scan.spacing, "grid spacing")
        ->default_str("log")
        ->check(CLI::IsMember({"log", "linear"}));
    cmd->add_option("--tolerance", scan.tolerance,
                    "absolute tolerance on the reduced quantities")
        ->default_val(lattice::default_tolerance)
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--serial", scan.serial, "disable the parallel kernels");
    add_output_options(cmd, scan.output);
    cmd->callback([&] {
      output = &scan.output;
      doc = scan_document(scan);
    });
  }

  ExpansionsOptions expansions;
  {
    auto* cmd = app.add_subcommand(
        "expansions", "compare both asymptotic branches against the lattice");
    cmd->add_option("--z", expansions.z, "reduced temperature-separation")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--order", expansions.order,
                    "number of exponential corrections")
        ->default_val(8)
        ->check(CLI::Range(0, 64));
    cmd->add_option("--tolerance", expansions.tolerance,
                    "lattice reference tolerance")
        ->default_val(lattice::default_tolerance)
        ->check(CLI::PositiveNumber);
    add_output_options(cmd, expansions.output);
    cmd->callback([&] {
      output = &expansions.output;
      doc = expansions_document(expansions);
    });
  }

  OrbitsOptions orbit_opts;
  {
    auto* cmd = app.add_subcommand(
        "orbits", "periodic orbits on the plate-thermal cylinder");
    cmd->add_option("--l3", orbit_opts.l3, "plate separation")
        ->default_val(1.0)
        ->check(CLI::PositiveNumber);
    cmd->add_option("--lT", orbit_opts.lT,
                    "thermal circumference; 0 means zero temperature")
        ->default_val(0.0)
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-length", orbit_opts.max_length, "length cutoff")
        ->required()
        ->check(CLI::PositiveNumber);
    add_output_options(cmd, orbit_opts.output);
    cmd->callback([&] {
      output = &orbit_opts.output;
      doc = orbits_document(orbit_opts);
    });
  }

  ClassicalBoxOptions box;
  {
    auto* cmd = app.add_subcommand(
        "classical-box", "high-temperature partition shift of a closed box");
    cmd->add_option("--L", box.partition.L, "box length")
        ->default_val(2.0)
        ->check(CLI::PositiveNumber);
    cmd->add_option("--l3", box.partition.l3, "wall position")
        ->default_val(1.0)
        ->check(CLI::PositiveNumber);
    cmd->add_option("--area", box.partition.transverse_area,
                    "transverse area")
        ->default_val(1.0)
        ->check(CLI::PositiveNumber);
    cmd->add_option("--n-max", box.n_max, "image sum cutoff")
        ->default_val(4000)
        ->check(CLI::Range(1, 100000000));
    cmd->add_option("--quad-tolerance", box.quad_tolerance,
                    "quadrature tolerance")
        ->default_val(1e-12)
        ->check(CLI::PositiveNumber);
    add_output_options(cmd, box.output);
    cmd->callback([&] {
      output = &box.output;
      doc = classical_box_document(box);
    });
  }

  double oracle_tolerance = lattice::default_tolerance;
  OutputOptions oracle_output;
  {
    auto* cmd = app.add_subcommand(
        "oracle-check",
        "cross-validate the lattice sum against the independent routes");
    cmd->add_option("--tolerance", oracle_tolerance, "evaluation tolerance")
        ->default_val(lattice::default_tolerance)
        ->check(CLI::PositiveNumber);
    add_output_options(cmd, oracle_output);
    cmd->callback([&] {
      output = &oracle_output;
      doc = oracle_check_document(oracle_tolerance, status);
    });
  }

  OutputOptions selftest_output;
  {
    auto* cmd =
        app.add_subcommand("selftest", "run the built-in invariant suite");
    add_output_options(cmd, selftest_output);
    cmd->callback([&] {
      output = &selftest_output;
      doc = selftest_document(status);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const casimirt::convergence_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (output == nullptr) return 2;
  const int emit_status = emit(doc, *output);
  if (emit_status != 0) return emit_status;
  return status;
}
