#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyperzeta::cli {

enum class Command { Transform, Wavefn, Potential, Zeros, Wigner, Dpo, Lerch };
enum class Format { Csv, Json };
enum class FigureId { Fig1I, Fig1II, Fig2A, Fig2B, Fig7, Fig8, Fig9, Fig10 };

std::optional<Command> parse_command(const std::string& name);
std::optional<FigureId> parse_figure(const std::string& name);
std::string figure_name(FigureId id);

struct RunConfig {
  Command command = Command::Transform;
  /// Command parameters keyed by flag name without dashes, e.g. "p-max".
  std::map<std::string, std::string> params;
  std::filesystem::path output_path;  // "-" writes to stdout
  Format format = Format::Csv;
  bool emit_plot_script = false;
  std::optional<FigureId> figure;
  double tol = 1e-10;
  unsigned seed = 42;
};

/// Column-oriented result of a command. `meta` travels only in JSON output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

/// Default tolerance: HYPERZETA_TOL if set and parseable, else 1e-10.
double default_tolerance();

/// Runs the command and returns its table. Throws hyperzeta::Error subclasses.
Table execute(const RunConfig& cfg);

void write_table(const Table& table, std::ostream& out, Format format);
void write_table(const Table& table, const std::filesystem::path& path, Format format);

/// Reads a CSV or JSON table produced by write_table (format sniffed).
Table read_table(const std::filesystem::path& path);

/// Gnuplot script for a figure; data rows are embedded as datablocks so the
/// script is standalone. Throws SchemaError if the columns do not match.
std::string figure_script(FigureId id, const Table& data);

/// Reads data_path and writes the figure script to script_path.
void emit_figure_recipe(FigureId id, const std::filesystem::path& data_path,
                        const std::filesystem::path& script_path);

/// Executes cfg end to end. Exit codes: 0 ok, 1 domain errors, 2 convergence
/// or quadrature errors, 3 I/O and schema errors. Diagnostics go to err.
int run(const RunConfig& cfg, std::ostream& err);

/// Command-line entry point (argument parsing plus run).
int main_entry(int argc, const char* const* argv);

}  // namespace hyperzeta::cli
