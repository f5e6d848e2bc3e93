// Command line front end: every subcommand is a thin shell around one
// library call, plus formatting.  All numeric output is exact (integers and
// "p/q" strings); JSON documents embed the resolved configuration so a saved
// report records how it was produced.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <hilbcenter/center.hpp>
#include <hilbcenter/errors.hpp>
#include <hilbcenter/expr.hpp>
#include <hilbcenter/fock.hpp>
#include <hilbcenter/hilbert.hpp>
#include <hilbcenter/quotient.hpp>
#include <hilbcenter/verify.hpp>

#ifndef HILBCENTER_DEFAULT_DATA_DIR
#define HILBCENTER_DEFAULT_DATA_DIR ""
#endif

namespace {

using namespace hilbcenter;

Json envelope(const std::string& command, const RunConfig& config) {
  Json j;
  j["command"] = command;
  j["config"] = config.echo();
  return j;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void emit_error(ErrorKind kind, const std::string& message, bool as_json) {
  if (as_json) {
    Json j;
    j["error"]["kind"] = kind_name(kind);
    j["error"]["message"] = message;
    std::cerr << j.dump(2) << '\n';
  } else {
    std::cerr << "error (" << kind_name(kind) << "): " << message << '\n';
  }
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s + std::string(width - s.size(), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width - s.size(), ' ') + s;
}

// ---------------------------------------------------------------- chartable

int cmd_chartable(const RunConfig& config, int n) {
  TableStore store(config.cache_dir, config.max_n, config.use_cache);
  const CharacterTable& table = store.get(n);

  if (config.format == OutputFormat::JsonDoc) {
    Json j = envelope("chartable", config);
    j["table"] = table.to_json();
    emit(j);
    return 0;
  }

  std::vector<std::string> headers;
  for (const Partition& p : table.labels) headers.push_back(p.to_text());

  if (config.format == OutputFormat::Csv) {
    std::cout << "irreducible";
    for (const std::string& h : headers) std::cout << ',' << h;
    std::cout << '\n';
    for (std::size_t i = 0; i < table.labels.size(); ++i) {
      std::cout << headers[i];
      for (const Int& v : table.values[i]) std::cout << ',' << v.get_str();
      std::cout << '\n';
    }
    return 0;
  }

  std::size_t label_width = 0;
  for (const std::string& h : headers) label_width = std::max(label_width, h.size());
  std::vector<std::size_t> widths(headers.size());
  std::vector<std::vector<std::string>> cells(table.labels.size());
  for (std::size_t j = 0; j < headers.size(); ++j) widths[j] = headers[j].size();
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    for (std::size_t j = 0; j < headers.size(); ++j) {
      cells[i].push_back(table.values[i][j].get_str());
      widths[j] = std::max(widths[j], cells[i][j].size());
    }
  }
  std::cout << pad_right("", label_width);
  for (std::size_t j = 0; j < headers.size(); ++j)
    std::cout << "  " << pad_left(headers[j], widths[j]);
  std::cout << '\n';
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    std::cout << pad_right(headers[i], label_width);
    for (std::size_t j = 0; j < headers.size(); ++j)
      std::cout << "  " << pad_left(cells[i][j], widths[j]);
    std::cout << '\n';
  }
  return 0;
}

// ------------------------------------------------------------------- center

int cmd_center(const RunConfig& config, int n, char basis_letter_arg,
               const std::string& expr) {
  TableStore store(config.cache_dir, config.max_n, config.use_cache);
  CenterAlgebra algebra(store);
  Basis target = basis_from_letter(basis_letter_arg);
  ExprValue value = evaluate_center_expression(algebra, expr);

  if (const CenterElement* element = std::get_if<CenterElement>(&value)) {
    if (element->degree() != n)
      throw InputError("expression lives in degree " +
                       std::to_string(element->degree()) +
                       ", but the command asked for degree " +
                       std::to_string(n));
    CenterElement converted = algebra.to_basis(*element, target);
    switch (config.format) {
      case OutputFormat::JsonDoc: {
        Json j = envelope("center", config);
        j["result"]["kind"] = "element";
        j["result"]["value"] = converted.to_json();
        emit(j);
        break;
      }
      case OutputFormat::Csv: {
        std::cout << "partition,coefficient\n";
        for (const auto& [p, q] : converted.coords())
          std::cout << p.to_text() << ',' << rat_to_string(q) << '\n';
        break;
      }
      case OutputFormat::Text:
        std::cout << converted.to_text() << '\n';
        break;
    }
    return 0;
  }

  const Rat& scalar = std::get<Rat>(value);
  switch (config.format) {
    case OutputFormat::JsonDoc: {
      Json j = envelope("center", config);
      j["result"]["kind"] = "scalar";
      j["result"]["value"] = rat_to_string(scalar);
      emit(j);
      break;
    }
    case OutputFormat::Csv:
      std::cout << "scalar\n" << rat_to_string(scalar) << '\n';
      break;
    case OutputFormat::Text:
      std::cout << rat_to_string(scalar) << '\n';
      break;
  }
  return 0;
}

// --------------------------------------------------------------------- fock

int cmd_fock(const RunConfig& config, int cap, bool check_commutators,
             int max_index) {
  if (!check_commutators)
    throw UsageError("fock: nothing to do (pass --check-commutators)");
  TableStore store(config.cache_dir, config.max_n, config.use_cache);
  CenterAlgebra algebra(store);
  FockSpace fock(algebra, cap);

  Json pairs = Json::array();
  bool all_passed = true;
  std::string first_failure;
  for (int i = 1; i <= max_index; ++i)
    for (int j = 1; j <= max_index; ++j) {
      CommutatorReport report = fock.commutator_check(i, j);
      pairs.push_back(report.to_json());
      if (!report.passed() && first_failure.empty()) {
        all_passed = false;
        first_failure =
            "i=" + std::to_string(i) + ", j=" + std::to_string(j);
      }
    }

  if (config.format == OutputFormat::JsonDoc) {
    Json j = envelope("fock", config);
    j["cap"] = cap;
    j["max_index"] = max_index;
    j["pairs"] = pairs;
    j["status"] = all_passed ? "pass" : "fail";
    j["first_failure"] = first_failure.empty() ? Json() : Json(first_failure);
    emit(j);
  } else {
    for (const Json& pair : pairs)
      std::cout << '[' << pair["status"].get<std::string>() << "] i="
                << pair["i"] << ", j=" << pair["j"] << '\n';
    std::cout << "status: " << (all_passed ? "pass" : "fail") << '\n';
    if (!all_passed) std::cout << "first failure: " << first_failure << '\n';
  }
  return all_passed ? 0 : exit_code(ErrorKind::Invariant);
}

// --------------------------------------------------------------------- hilb

int cmd_hilb_betti(const RunConfig& config, int n) {
  std::vector<long long> betti = betti_numbers(n);
  switch (config.format) {
    case OutputFormat::JsonDoc: {
      Json j = envelope("hilb betti", config);
      j["n"] = n;
      j["betti"] = betti;
      emit(j);
      break;
    }
    case OutputFormat::Csv:
      std::cout << "filtration_degree,dimension\n";
      for (std::size_t k = 0; k < betti.size(); ++k)
        std::cout << k << ',' << betti[k] << '\n';
      break;
    case OutputFormat::Text: {
      for (std::size_t k = 0; k < betti.size(); ++k)
        std::cout << (k ? " " : "") << betti[k];
      std::cout << '\n';
      break;
    }
  }
  return 0;
}

int cmd_hilb_cup(const RunConfig& config, int n) {
  TableStore store(config.cache_dir, config.max_n, config.use_cache);
  CenterAlgebra algebra(store);
  DiskCache cache(config.cache_dir);
  GradedRing ring = hilbert_graded_ring(
      algebra, n, config.use_cache ? &cache : nullptr, config.jobs);

  auto triples = ring.nonzero_constants();
  switch (config.format) {
    case OutputFormat::JsonDoc: {
      Json j = envelope("hilb cup", config);
      j["n"] = n;
      Json list = Json::array();
      for (const auto& [i, jdx, k, q] : triples) {
        Json row;
        row["lambda"] = ring.labels()[i];
        row["mu"] = ring.labels()[jdx];
        row["nu"] = ring.labels()[k];
        row["coefficient"] = rat_to_string(q);
        list.push_back(std::move(row));
      }
      j["products"] = std::move(list);
      emit(j);
      break;
    }
    case OutputFormat::Csv:
      std::cout << "lambda,mu,nu,coefficient\n";
      for (const auto& [i, jdx, k, q] : triples)
        std::cout << partition_from_key(ring.labels()[i]).to_text() << ','
                  << partition_from_key(ring.labels()[jdx]).to_text() << ','
                  << partition_from_key(ring.labels()[k]).to_text() << ','
                  << rat_to_string(q) << '\n';
      break;
    case OutputFormat::Text:
      for (const auto& [i, jdx, k, q] : triples)
        std::cout << ring.labels()[i] << ' ' << ring.labels()[jdx] << ' '
                  << ring.labels()[k] << ' ' << rat_to_string(q) << '\n';
      break;
  }
  return 0;
}

int cmd_hilb_verify(const RunConfig& config, int n) {
  TableStore store(config.cache_dir, config.max_n, config.use_cache);
  CenterAlgebra algebra(store);
  VerifyReport report;
  report.n = n;
  auto run = [&](const std::string& name, auto&& body) {
    try {
      body();
      report.checks.push_back({name, CheckStatus::Pass, ""});
    } catch (const Error& e) {
      report.checks.push_back({name, CheckStatus::Fail, e.what()});
    }
  };

  run("graded dimensions match the Betti numbers", [&] {
    GradedRing ring = hilbert_graded_ring(algebra, n);
    auto dims = ring.graded_dimensions();
    auto betti = betti_numbers(n);
    for (int k = 0; k < static_cast<int>(betti.size()); ++k) {
      long long dim = dims.contains(k) ? dims[k] : 0;
      if (dim != betti[k])
        throw InvariantViolation("degree " + std::to_string(k) + " has " +
                                 std::to_string(dim) + " classes, expected " +
                                 std::to_string(betti[k]));
    }
  });

  if (n > 7) {
    report.checks.push_back({"graded ring is commutative and associative",
                             CheckStatus::Skip,
                             "exhaustive triple loop capped at n = 7"});
  } else {
    run("graded ring is commutative and associative", [&] {
      GradedRing ring = hilbert_graded_ring(algebra, n);
      std::size_t dim = ring.dimension();
      auto unit = [&](std::size_t i) {
        std::vector<Rat> v(dim);
        v[i] = 1;
        return v;
      };
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          if (ring.multiply(unit(i), unit(j)) !=
              ring.multiply(unit(j), unit(i)))
            throw InvariantViolation("not commutative");
          for (std::size_t k = 0; k < dim; ++k)
            if (ring.multiply(ring.multiply(unit(i), unit(j)), unit(k)) !=
                ring.multiply(unit(i), ring.multiply(unit(j), unit(k))))
              throw InvariantViolation("not associative");
        }
    });
  }

  run("localization rows validate", [&] { localization_data(algebra, n); });

  if (config.format == OutputFormat::JsonDoc) {
    Json j = envelope("hilb verify", config);
    j["report"] = report.to_json();
    emit(j);
  } else {
    std::cout << report.to_text();
  }
  return report.all_passed() ? 0 : exit_code(ErrorKind::Invariant);
}

// ----------------------------------------------------------------- quotient

int cmd_quotient(const RunConfig& config, const std::string& input,
                 bool graded_ring, bool check_age,
                 const std::string& reference) {
  std::ifstream in(input);
  if (!in) throw InputError("cannot open group file: " + input);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw InputError("cannot parse " + input + ": " + e.what());
  }
  GroupSpec spec = GroupSpec::from_json(doc);
  FiniteGroup group = FiniteGroup::enumerate(spec, config);

  bool all_passed = true;
  Json checks;
  SubadditivityReport sub = subadditivity_check(group, config);
  checks["subadditivity"] = sub.to_json();
  all_passed = all_passed && sub.passed;
  if (check_age) {
    AgeReport age = age_consistency_check(group);
    checks["age"] = age.to_json();
    all_passed = all_passed && age.passed;
  }
  if (!reference.empty()) {
    ReferenceComparison cmp =
        compare_with_reference(group, reference, config.reference_betti_file());
    checks["reference"] = cmp.to_json();
    all_passed = all_passed && cmp.matches;
  }

  Json gr_dims = Json::array();
  if (graded_ring) {
    GradedRing ring = filtered_class_algebra(group, config.jobs);
    for (const auto& [w, dim] : ring.graded_dimensions()) {
      Json row;
      row["w"] = w;
      row["dim"] = dim;
      gr_dims.push_back(std::move(row));
    }
  }

  if (config.format == OutputFormat::JsonDoc) {
    Json j = envelope("quotient", config);
    j["group"] = spec.name.empty() ? Json() : Json(spec.name);
    j["order"] = group.order();
    j["classes"] = group.class_list_json();
    if (graded_ring) j["gr_dims"] = gr_dims;
    j["checks"] = checks;
    j["status"] = all_passed ? "pass" : "fail";
    emit(j);
  } else {
    std::cout << "group " << (spec.name.empty() ? "(unnamed)" : spec.name)
              << ": order " << group.order() << ", "
              << group.classes().size() << " classes\n";
    for (const auto& cls : group.classes())
      std::cout << "  class of size " << cls.elements.size() << ", w = "
                << cls.w << ", element order " << cls.element_order.get_str()
                << '\n';
    if (graded_ring) {
      std::cout << "graded dimensions:";
      for (const auto& row : gr_dims)
        std::cout << ' ' << row["w"] << ':' << row["dim"];
      std::cout << '\n';
    }
    std::cout << "subadditivity: " << (sub.passed ? "pass" : "fail") << " ("
              << sub.pairs_checked << " pairs, "
              << (sub.exhaustive ? "exhaustive" : "sampled") << ")\n";
    if (check_age)
      std::cout << "age consistency: "
                << (checks["age"]["status"] == "pass" ? "pass" : "fail")
                << '\n';
    if (!reference.empty())
      std::cout << "reference '" << reference << "': "
                << (checks["reference"]["matches"].get<bool>() ? "match"
                                                               : "MISMATCH")
                << '\n';
  }
  return all_passed ? 0 : exit_code(ErrorKind::Invariant);
}

// ------------------------------------------------------------------- verify

int cmd_verify(const RunConfig& config, int n) {
  TableStore store(config.cache_dir, config.max_n, config.use_cache);
  CenterAlgebra algebra(store);
  VerifyReport report = run_verify(algebra, n, config);
  if (config.format == OutputFormat::JsonDoc) {
    Json j = envelope("verify", config);
    j["report"] = report.to_json();
    emit(j);
  } else {
    std::cout << report.to_text();
  }
  return report.all_passed() ? 0 : exit_code(ErrorKind::Invariant);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config = RunConfig::resolve(HILBCENTER_DEFAULT_DATA_DIR);

  CLI::App app{
      "exact model of the cohomology of Hilbert schemes of plane points,\n"
      "built from the centers of the symmetric group algebras"};
  app.require_subcommand(1);

  bool json_flag = false;
  bool csv_flag = false;
  std::string cache_dir_flag;
  auto* json_opt = app.add_flag("--json", json_flag, "emit JSON documents");
  app.add_flag("--csv", csv_flag, "emit CSV tables")->excludes(json_opt);
  app.add_option("--cache-dir", cache_dir_flag,
                 "cache directory (overrides HILBCENTER_CACHE_DIR)");
  app.add_option("--max-n", config.max_n, "largest degree the table store accepts")
      ->check(CLI::Range(1, 1000000));
  app.add_option("--seed", config.seed, "seed for sampled checks");
  app.add_option("--jobs", config.jobs, "worker threads for product tables")
      ->check(CLI::Range(1, 1000000));

  auto* chartable = app.add_subcommand(
      "chartable", "character table of the symmetric group S_n");
  int chartable_n = 0;
  bool chartable_no_cache = false;
  chartable->add_option("n", chartable_n, "degree")->required()
      ->check(CLI::Range(0, 1000000));
  chartable->add_flag("--no-cache", chartable_no_cache,
                      "compute without touching the disk cache");

  auto* center = app.add_subcommand(
      "center", "evaluate an expression in the center of Q[S_n]");
  int center_n = 0;
  std::string center_basis = "c";
  std::string center_expr;
  center->add_option("n", center_n, "degree")->required()
      ->check(CLI::Range(0, 1000000));
  center->add_option("--basis", center_basis, "output basis: c, s, h or m")
      ->check(CLI::IsMember({"c", "s", "h", "m"}));
  center->add_option("--expr", center_expr,
                     "expression over c[..], s[..], h[..], m[..] atoms with "
                     "* (induction), . (convolution), | (pairing)")
      ->required();

  auto* fock = app.add_subcommand(
      "fock", "Heisenberg operators on the truncated sum of the centers");
  int fock_cap = 6;
  bool fock_check = false;
  int fock_max_index = 3;
  fock->add_option("--cap", fock_cap, "largest degree kept")->required()
      ->check(CLI::Range(0, 1000000));
  fock->add_flag("--check-commutators", fock_check,
                 "verify the commutation relations on every basis vector");
  fock->add_option("--max-index", fock_max_index,
                   "check operator indices up to this value")
      ->check(CLI::Range(1, 1000000));

  auto* hilb = app.add_subcommand(
      "hilb", "cohomology model of the Hilbert scheme of n points");
  hilb->require_subcommand(1);
  auto* hilb_betti = hilb->add_subcommand("betti", "Betti numbers");
  int hilb_betti_n = 0;
  hilb_betti->add_option("n", hilb_betti_n, "number of points")->required()
      ->check(CLI::Range(1, 1000000));
  auto* hilb_cup = hilb->add_subcommand(
      "cup", "cup product structure constants (sparse table)");
  int hilb_cup_n = 0;
  hilb_cup->add_option("n", hilb_cup_n, "number of points")->required()
      ->check(CLI::Range(1, 1000000));
  auto* hilb_verify = hilb->add_subcommand(
      "verify", "invariants of the graded ring and localization data");
  int hilb_verify_n = 0;
  hilb_verify->add_option("n", hilb_verify_n, "number of points")->required()
      ->check(CLI::Range(1, 1000000));

  auto* quotient = app.add_subcommand(
      "quotient", "filtered class algebra of a finite symplectic group");
  std::string quotient_input;
  bool quotient_graded = false;
  bool quotient_age = false;
  std::string quotient_reference;
  quotient->add_option("--input", quotient_input, "group description (JSON)")
      ->required();
  quotient->add_flag("--graded-ring", quotient_graded,
                     "build the graded class algebra and report dimensions");
  quotient->add_flag("--check-age", quotient_age,
                     "recompute ages from eigenvalues and compare with w/2");
  quotient->add_option("--reference", quotient_reference,
                       "compare against this entry of the reference Betti table");

  auto* verify = app.add_subcommand(
      "verify", "run the full cross-module invariant suite at degree n");
  int verify_n = 0;
  verify->add_option("n", verify_n, "degree")->required()
      ->check(CLI::Range(0, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error(ErrorKind::Usage, e.what(), json_flag);
    return exit_code(ErrorKind::Usage);
  }

  config.format = json_flag ? OutputFormat::JsonDoc
                            : (csv_flag ? OutputFormat::Csv : OutputFormat::Text);
  if (!cache_dir_flag.empty()) config.cache_dir = cache_dir_flag;

  try {
    if (*chartable) {
      RunConfig local = config;
      local.use_cache = !chartable_no_cache;
      return cmd_chartable(local, chartable_n);
    }
    if (*center)
      return cmd_center(config, center_n, center_basis[0], center_expr);
    if (*fock) return cmd_fock(config, fock_cap, fock_check, fock_max_index);
    if (*hilb_betti) return cmd_hilb_betti(config, hilb_betti_n);
    if (*hilb_cup) return cmd_hilb_cup(config, hilb_cup_n);
    if (*hilb_verify) return cmd_hilb_verify(config, hilb_verify_n);
    if (*quotient)
      return cmd_quotient(config, quotient_input, quotient_graded,
                          quotient_age, quotient_reference);
    if (*verify) return cmd_verify(config, verify_n);
    emit_error(ErrorKind::Usage, "no subcommand selected", json_flag);
    return exit_code(ErrorKind::Usage);
  } catch (const Error& e) {
    emit_error(e.kind(), e.what(), json_flag);
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    emit_error(ErrorKind::Internal, e.what(), json_flag);
    return exit_code(ErrorKind::Internal);
  }
}
