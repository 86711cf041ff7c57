#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rodring/counting.hpp"
#include "rodring/enumerate.hpp"
#include "rodring/errors.hpp"
#include "rodring/geometry.hpp"
#include "rodring/json_io.hpp"
#include "rodring/render.hpp"
#include "rodring/transfer.hpp"
#include "rodring/verify.hpp"

namespace {

using namespace rodring;

// Relative -o paths land under $RODRING_OUT_DIR when it is set; parent
// directories are created either way.
std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("RODRING_OUT_DIR"); dir && *dir) {
      p = std::filesystem::path(dir) / p;
    }
  }
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  return p;
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  const std::filesystem::path p = resolve_output(out_path);
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + p.string());
  f << content;
}

// Which group realizes an equivalence on this border: rotational means C4
// for squares but only the half turn for proper rectangles; dihedral needs
// the full square symmetry.
GroupTag group_for(const BorderSpec& spec, Equivalence e) {
  if (e == Equivalence::Dihedral) {
    if (spec.m != spec.n) throw std::invalid_argument("dihedral reduction needs a square border");
    return GroupTag::D4;
  }
  return spec.m == spec.n ? GroupTag::C4 : GroupTag::C2;
}

std::string csv_header() { return "m,n,equivalence,method,value\n"; }

std::string csv_row(const CountResult& r) {
  return std::to_string(r.spec.m) + "," + std::to_string(r.spec.n) + "," +
         name_of(r.equivalence) + "," + name_of(r.method) + "," + to_decimal(r.value) + "\n";
}

struct CountOpts {
  int n = 0, m = 0;
  std::string equivalence = "none", method = "closed_form", format = "text", output;
  int guard = kDefaultCellGuard;
};

int run_count(const CountOpts& o) {
  const BorderSpec spec{o.m > 0 ? o.m : o.n, o.n};
  const Equivalence eq = equivalence_from_name(o.equivalence);
  const CountMethod method =
      method_from_name(o.method == "burnside" ? "burnside_first_principles" : o.method);
  const int k = ring_length(spec);
  const bool square = spec.m == spec.n;

  auto oracle_orbit = [&](GroupTag g) {
    const auto report =
        orbit_count_direct(enumerate_ring_tilings(k, o.guard), symmetry_elements(spec, g));
    return CountResult{report.orbit_count, CountMethod::Oracle, spec, eq};
  };
  auto reject_transfer = [&] {
    throw std::invalid_argument("--method transfer_matrix computes plain counts only");
  };

  CountResult primary;
  std::optional<CountResult> as_printed;
  switch (eq) {
    case Equivalence::None:
      switch (method) {
        case CountMethod::ClosedForm:
          primary = square ? count_square_border(spec.n) : count_rect_border(spec.m, spec.n);
          break;
        case CountMethod::TransferMatrix:
          primary = {cycle_count_via_matrix(k), CountMethod::TransferMatrix, spec, eq};
          break;
        case CountMethod::Oracle:
          primary = {BigInt(enumerate_ring_tilings(k, o.guard).size()), CountMethod::Oracle, spec, eq};
          break;
        case CountMethod::BurnsideFirstPrinciples:
          throw std::invalid_argument(
              "--method burnside needs --equivalence rotational or dihedral");
      }
      break;
    case Equivalence::Rotational: {
      if (!square) as_printed = count_rect_rotational_as_printed(spec.m, spec.n);
      switch (method) {
        case CountMethod::ClosedForm:
          primary = square ? count_square_rotational(spec.n)
                           : count_rect_rotational_corrected(spec.m, spec.n);
          break;
        case CountMethod::BurnsideFirstPrinciples:
          primary = burnside_first_principles(spec, group_for(spec, eq)).result;
          break;
        case CountMethod::Oracle:
          primary = oracle_orbit(group_for(spec, eq));
          break;
        case CountMethod::TransferMatrix:
          reject_transfer();
      }
      break;
    }
    case Equivalence::Dihedral:
      if (!square) throw std::invalid_argument("dihedral reduction needs a square border");
      switch (method) {
        case CountMethod::ClosedForm:
          primary = count_square_dihedral(spec.n);
          break;
        case CountMethod::BurnsideFirstPrinciples:
          primary = burnside_first_principles(spec, GroupTag::D4).result;
          break;
        case CountMethod::Oracle:
          primary = oracle_orbit(GroupTag::D4);
          break;
        case CountMethod::TransferMatrix:
          reject_transfer();
      }
      break;
  }

  std::string content;
  if (o.format == "text") {
    if (as_printed) {
      content = "corrected: " + to_decimal(primary.value) + "\n" +
                "as-printed: " + to_decimal(as_printed->value) + "\n";
      if (as_printed->value != primary.value) {
        content +=
            "note: the as-printed closed form disagrees with the verified count; "
            "see `rodring verify`\n";
      }
    } else {
      content = to_decimal(primary.value) + "\n";
    }
  } else if (o.format == "json") {
    Json j = as_printed ? Json{{"corrected", to_json(primary)},
                              {"as_printed", to_json(*as_printed)},
                              {"mismatch", primary.value != as_printed->value}}
                        : to_json(primary);
    content = j.dump(2) + "\n";
  } else {  // csv: the verified value only
    content = csv_header() + csv_row(primary);
  }
  write_output(o.output, content);
  return 0;
}

struct EnumerateOpts {
  int n = 0, m = 0;
  std::string model = "ring", up_to = "none", format = "text", output;
  int max_rod = 2;
  int guard = kDefaultCellGuard;
};

std::string geo_tile_str(const GeoTile& t) {
  std::string s = kind_name(t.length);
  for (const auto& [r, c] : t.cells) {
    s += " (" + std::to_string(r) + "," + std::to_string(c) + ")";
  }
  return s;
}

int run_enumerate(const EnumerateOpts& o) {
  const BorderSpec spec{o.m > 0 ? o.m : o.n, o.n};
  const Equivalence up_to = equivalence_from_name(o.up_to);
  std::string content;

  if (o.model == "ring") {
    if (o.max_rod != 2) {
      throw std::invalid_argument("--max-rod applies to the geometric model only");
    }
    auto tilings = enumerate_ring_tilings(ring_length(spec), o.guard);
    if (up_to != Equivalence::None) {
      tilings = orbit_representatives(tilings, symmetry_elements(spec, group_for(spec, up_to)));
    }
    if (o.format == "text") {
      for (const Tiling& t : tilings) content += t.word() + "\n";
    } else {
      content = to_json(Catalog{spec, up_to, std::move(tilings)}).dump(2) + "\n";
    }
  } else {
    if (up_to != Equivalence::None) {
      throw std::invalid_argument("--up-to applies to the ring model only");
    }
    const auto tilings = enumerate_geometric_tilings(spec, o.max_rod, o.guard);
    if (o.format == "text") {
      for (const GeometricTiling& t : tilings) {
        std::string line;
        for (const GeoTile& tile : t.tiles) {
          line += (line.empty() ? "" : "; ") + geo_tile_str(tile);
        }
        content += line + "\n";
      }
    } else {
      Json arr = Json::array();
      for (const GeometricTiling& t : tilings) arr.push_back(to_json(t));
      content = Json{{"m", spec.m},
                     {"n", spec.n},
                     {"max_rod", o.max_rod},
                     {"count", tilings.size()},
                     {"tilings", arr}}
                    .dump(2) +
                "\n";
    }
  }
  write_output(o.output, content);
  return 0;
}

struct RenderOpts {
  int n = 0, m = 0;
  std::string input, model = "ring", up_to = "none", format = "svg", output;
  int max_rod = 2, columns = 8;
  int guard = kDefaultCellGuard;
};

int run_render(const RenderOpts& o) {
  std::vector<GeometricTiling> geo;
  if (!o.input.empty()) {
    std::ifstream f(o.input);
    if (!f) throw std::invalid_argument("cannot read " + o.input);
    Json j;
    try {
      f >> j;
    } catch (const Json::exception& e) {
      throw std::invalid_argument(std::string("malformed catalog JSON: ") + e.what());
    }
    const Catalog catalog = catalog_from_json(j);
    geo.reserve(catalog.tilings.size());
    for (const Tiling& t : catalog.tilings) geo.push_back(to_geometric(t, catalog.spec));
  } else {
    if (o.n == 0) throw std::invalid_argument("render needs --n or --input");
    const BorderSpec spec{o.m > 0 ? o.m : o.n, o.n};
    const Equivalence up_to = equivalence_from_name(o.up_to);
    if (o.model == "ring") {
      auto tilings = enumerate_ring_tilings(ring_length(spec), o.guard);
      if (up_to != Equivalence::None) {
        tilings = orbit_representatives(tilings, symmetry_elements(spec, group_for(spec, up_to)));
      }
      geo.reserve(tilings.size());
      for (const Tiling& t : tilings) geo.push_back(to_geometric(t, spec));
    } else {
      if (up_to != Equivalence::None) {
        throw std::invalid_argument("--up-to applies to the ring model only");
      }
      geo = enumerate_geometric_tilings(spec, o.max_rod, o.guard);
    }
  }

  std::string content;
  if (o.format == "ascii") {
    for (size_t i = 0; i < geo.size(); ++i) {
      if (i > 0) content += "\n";
      content += render_tiling_ascii(geo[i]);
    }
  } else {
    RenderStyle style;
    style.columns = o.columns;
    content = render_catalog_svg(geo, style);
  }
  write_output(o.output, content);
  return 0;
}

struct VerifyCliOpts {
  VerifyOptions ranges;
  bool strict = false;
  std::string output;
};

int run_verify(const VerifyCliOpts& o) {
  const auto results = run_verification(o.ranges);
  int pass = 0, fail = 0, expected = 0;
  std::string content;
  for (const CheckResult& r : results) {
    std::string status;
    switch (r.status) {
      case CheckStatus::Pass: status = "PASS"; ++pass; break;
      case CheckStatus::Fail: status = "FAIL"; ++fail; break;
      case CheckStatus::ExpectedMismatch: status = "EXPECTED-MISMATCH"; ++expected; break;
    }
    status.resize(19, ' ');
    content += status + r.name + " [" + r.detail + "]\n";
  }
  content += "summary: " + std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
             std::to_string(expected) + " expected-mismatch\n";
  const bool ok = verification_passed(results, o.strict);
  content += ok ? "verification: OK\n" : "verification: FAILED\n";
  write_output(o.output, content);
  return ok ? 0 : 1;
}

struct TableOpts {
  int max_n = 0, min_n = 2, max_m = 0, min_m = 2;
  std::string format = "csv", output;
};

int run_table(const TableOpts& o) {
  const int max_m = o.max_m > 0 ? o.max_m : o.max_n;
  if (o.min_m < 2 || o.min_n < 2 || max_m < o.min_m || o.max_n < o.min_n) {
    throw std::invalid_argument("bad table range");
  }
  if (max_m > 60 || o.max_n > 60) {
    throw std::invalid_argument("table dimensions are capped at 60");
  }

  std::vector<CountResult> rows;
  for (int m = o.min_m; m <= max_m; ++m) {
    for (int n = o.min_n; n <= o.max_n; ++n) {
      rows.push_back(count_rect_border(m, n));
      rows.push_back(m == n ? count_square_rotational(n)
                            : count_rect_rotational_corrected(m, n));
      if (m == n) rows.push_back(count_square_dihedral(n));
    }
  }

  std::string content;
  if (o.format == "csv") {
    content = csv_header();
    for (const CountResult& r : rows) content += csv_row(r);
  } else {
    Json arr = Json::array();
    for (const CountResult& r : rows) arr.push_back(to_json(r));
    content = arr.dump(2) + "\n";
  }
  write_output(o.output, content);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact monomer/dimer tiling counts on rectangular border rings"};
  app.require_subcommand(1);

  CountOpts count_opts;
  auto* count = app.add_subcommand("count", "Count tilings of one border ring");
  count->add_option("--n", count_opts.n, "columns (and rows unless --m is given)")->required();
  count->add_option("--m", count_opts.m, "rows, for rectangular borders");
  count->add_option("--equivalence", count_opts.equivalence)
      ->check(CLI::IsMember({"none", "rotational", "dihedral"}))
      ->capture_default_str();
  count->add_option("--method", count_opts.method)
      ->check(CLI::IsMember(
          {"closed_form", "transfer_matrix", "burnside", "burnside_first_principles", "oracle"}))
      ->capture_default_str();
  count->add_option("--format", count_opts.format)
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  count->add_option("-o,--output", count_opts.output, "write here instead of stdout");
  count->add_option("--max-cells", count_opts.guard, "enumeration guard for --method oracle")
      ->capture_default_str();

  EnumerateOpts enum_opts;
  auto* enumerate = app.add_subcommand("enumerate", "List every tiling of one border ring");
  enumerate->add_option("--n", enum_opts.n, "columns (and rows unless --m is given)")->required();
  enumerate->add_option("--m", enum_opts.m, "rows, for rectangular borders");
  enumerate->add_option("--model", enum_opts.model)
      ->check(CLI::IsMember({"ring", "geometric"}))
      ->capture_default_str();
  enumerate->add_option("--max-rod", enum_opts.max_rod, "longest rod, geometric model only")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  enumerate->add_option("--up-to", enum_opts.up_to, "keep one tiling per symmetry orbit")
      ->check(CLI::IsMember({"none", "rotational", "dihedral"}))
      ->capture_default_str();
  enumerate->add_option("--format", enum_opts.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  enumerate->add_option("-o,--output", enum_opts.output, "write here instead of stdout");
  enumerate->add_option("--max-cells", enum_opts.guard, "enumeration guard")->capture_default_str();

  RenderOpts render_opts;
  auto* render = app.add_subcommand("render", "Draw a tiling catalog (SVG or text)");
  auto* render_n =
      render->add_option("--n", render_opts.n, "columns (and rows unless --m is given)");
  render->add_option("--m", render_opts.m, "rows, for rectangular borders");
  render->add_option("--input", render_opts.input, "render a catalog JSON written by enumerate")
      ->excludes(render_n);
  render->add_option("--model", render_opts.model)
      ->check(CLI::IsMember({"ring", "geometric"}))
      ->capture_default_str();
  render->add_option("--max-rod", render_opts.max_rod, "longest rod, geometric model only")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  render->add_option("--up-to", render_opts.up_to, "keep one tiling per symmetry orbit")
      ->check(CLI::IsMember({"none", "rotational", "dihedral"}))
      ->capture_default_str();
  render->add_option("--format", render_opts.format)
      ->check(CLI::IsMember({"svg", "ascii"}))
      ->capture_default_str();
  render->add_option("--columns", render_opts.columns, "tilings per catalog row")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  render->add_option("-o,--output", render_opts.output, "write here instead of stdout");
  render->add_option("--max-cells", render_opts.guard, "enumeration guard")->capture_default_str();

  VerifyCliOpts verify_opts;
  auto* verify = app.add_subcommand("verify", "Cross-check every counting method");
  verify->add_flag("--strict-paper", verify_opts.strict,
                   "fail on as-printed closed-form mismatches instead of reporting them");
  verify->add_option("--max-square-n", verify_opts.ranges.max_square_n)->capture_default_str();
  verify->add_option("--max-rect", verify_opts.ranges.max_rect_dim)->capture_default_str();
  verify->add_option("--max-ring", verify_opts.ranges.max_ring_cells)->capture_default_str();
  verify->add_option("--max-geo", verify_opts.ranges.max_geo_dim)->capture_default_str();
  verify->add_option("--max-burnside", verify_opts.ranges.max_burnside_n)->capture_default_str();
  verify->add_option("--max-orbit", verify_opts.ranges.max_orbit_n)->capture_default_str();
  verify->add_option("-o,--output", verify_opts.output, "write here instead of stdout");

  TableOpts table_opts;
  auto* table = app.add_subcommand("table", "Counts for a whole range of borders");
  table->add_option("--max-n", table_opts.max_n)->required();
  table->add_option("--min-n", table_opts.min_n)->capture_default_str();
  table->add_option("--max-m", table_opts.max_m, "defaults to --max-n");
  table->add_option("--min-m", table_opts.min_m)->capture_default_str();
  table->add_option("--format", table_opts.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_option("-o,--output", table_opts.output, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return run_count(count_opts);
    if (enumerate->parsed()) return run_enumerate(enum_opts);
    if (render->parsed()) return run_render(render_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (table->parsed()) return run_table(table_opts);
  } catch (const rodring::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
