// SPDX-License-Identifier: Apache-2.0
//
// distgeom: command-line front end for the distance-geometry library.
// Exit codes: 0 success, 1 negative verdict, 2 input error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "distgeom/embedding.hpp"
#include "distgeom/io.hpp"
#include "distgeom/matrices.hpp"
#include "distgeom/menger.hpp"
#include "distgeom/rigidity.hpp"
#include "distgeom/simplex.hpp"
#include "distgeom/sphere.hpp"

namespace {

using distgeom::io::format_number;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::string subset_string(const distgeom::Subset& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

std::string numbers_line(const Eigen::VectorXd& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_number(v(i));
  }
  return out;
}

struct Options {
  std::string matrix_file;
  std::optional<double> tol;
  std::optional<std::size_t> dim;
  std::string out;
  std::string anchors;
  std::string dists;
  std::vector<double> sides;
  std::vector<std::uint64_t> counts;
  std::vector<std::string> signs;
};

distgeom::Tolerances rank_tolerances(const Options& o) {
  distgeom::Tolerances t;
  if (o.tol) t.rank_tol = *o.tol;
  t.validate();
  return t;
}

distgeom::DistanceMatrix load_distances(const Options& o,
                                        const distgeom::Tolerances& tol) {
  return distgeom::DistanceMatrix::validate(
      distgeom::io::read_table_file(o.matrix_file), tol);
}

int cmd_check_edm(const Options& o) {
  const auto tol = rank_tolerances(o);
  const auto v = distgeom::classify_edm(load_distances(o, tol), tol);
  if (v.is_edm) {
    std::cout << "EDM r=" << v.rank << '\n';
    return kOk;
  }
  std::cout << "NOT-EDM lambda_min=" << format_number(v.min_eigenvalue) << '\n';
  return kNegative;
}

int cmd_mds(const Options& o) {
  const auto tol = rank_tolerances(o);
  const auto r = distgeom::classical_mds(load_distances(o, tol), tol, o.dim);
  std::cout << "H=" << r.inherent_dim << '\n';
  std::cout << "eigenvalues=" << numbers_line(r.eigenvalues) << '\n';
  std::cout << "residual=" << format_number(r.residual) << '\n';
  if (o.out.empty()) {
    distgeom::io::write_coords(std::cout, r.realization);
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << '\n';
      return kInputError;
    }
    distgeom::io::write_coords(f, r.realization);
  }
  return kOk;
}

int cmd_volume(const Options& o) {
  const auto tol = rank_tolerances(o);
  const distgeom::SimplexSides sides(load_distances(o, tol));
  const auto v = distgeom::simplex_volume(sides, tol);
  const double cm = distgeom::cayley_menger_determinant(sides);
  if (const auto* bad = std::get_if<distgeom::Infeasible>(&v)) {
    std::cout << "INFEASIBLE V2=" << format_number(bad->value) << '\n';
    std::cout << "cayley_menger=" << format_number(cm) << '\n';
    return kNegative;
  }
  std::cout << format_number(std::get<double>(v)) << '\n';
  std::cout << "cayley_menger=" << format_number(cm) << '\n';
  std::cout << "flat=" << (distgeom::is_flat(sides, tol) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_heron(const Options& o) {
  const distgeom::TriangleSides t(o.sides[0], o.sides[1], o.sides[2]);
  const auto area = distgeom::heron_area(t);
  if (const auto* bad = std::get_if<distgeom::Infeasible>(&area)) {
    std::cout << "INFEASIBLE radicand=" << format_number(bad->value) << '\n';
    return kNegative;
  }
  std::cout << format_number(std::get<double>(area)) << '\n';
  std::cout << "inradius=" << format_number(std::get<double>(distgeom::inradius(t)))
            << '\n';
  return kOk;
}

int cmd_trilaterate(const Options& o) {
  distgeom::Tolerances tol;
  if (o.tol) tol.dist_tol = *o.tol;
  tol.validate();
  distgeom::TrilaterationProblem p{
      distgeom::Realization(distgeom::io::read_table_file(o.anchors)),
      distgeom::io::parse_list(o.dists)};
  try {
    const auto r = distgeom::trilaterate(p, tol);
    if (const auto* none = std::get_if<distgeom::NoSolution>(&r)) {
      std::cout << "NO-SOLUTION residual=" << format_number(none->residual) << '\n';
      return kNegative;
    }
    const Eigen::VectorXd& y = std::get<Eigen::VectorXd>(r);
    distgeom::io::write_coords(std::cout,
                               distgeom::Realization(y.transpose()));
    return kOk;
  } catch (const distgeom::Error& e) {
    if (e.kind() != distgeom::ErrorKind::DependentAnchors) throw;
    std::cout << "DEPENDENT-ANCHORS\n";
    return kNegative;
  }
}

int cmd_sphere_embed(const Options& o) {
  const auto tol = rank_tolerances(o);
  const auto d = load_distances(o, tol);
  if (d.size() != 4) {
    std::cerr << "error: sphere-embed needs a 4x4 matrix, got " << d.size()
              << "x" << d.size() << '\n';
    return kInputError;
  }
  try {
    const auto r = distgeom::embed_on_sphere(
        distgeom::GeodesicTetrahedron::from_matrix(d), tol);
    if (const auto* na = std::get_if<distgeom::NotApplicable>(&r)) {
      std::cout << "NOT-APPLICABLE " << na->reason << '\n';
      return kNegative;
    }
    const auto& e = std::get<distgeom::SphericalEmbedding>(r);
    std::cout << "radius=" << format_number(e.radius) << '\n';
    distgeom::io::write_coords(std::cout, distgeom::Realization(e.points));
    return kOk;
  } catch (const distgeom::Error& e) {
    if (e.kind() != distgeom::ErrorKind::NoConvergence) throw;
    std::cout << "NO-CONVERGENCE " << e.what() << '\n';
    return kNegative;
  }
}

int cmd_menger(const Options& o) {
  const auto tol = rank_tolerances(o);
  const distgeom::FiniteSemiMetricSpace s(load_distances(o, tol));
  const std::size_t n = *o.dim;
  const auto result = distgeom::congruently_embeddable(s, n, tol);

  std::optional<distgeom::MengerReport> report;
  if (s.size() <= distgeom::kMaxMengerSize)
    report = distgeom::verify_menger_criterion(s, n, tol);

  int code = kOk;
  if (const auto* e = std::get_if<distgeom::Embeddable>(&result)) {
    std::cout << "EMBEDDABLE\n";
    distgeom::io::write_coords(std::cout, e->realization);
  } else {
    const auto& ne = std::get<distgeom::NotEmbeddable>(result);
    std::cout << "NOT-EMBEDDABLE subset=" << subset_string(ne.failing_subset)
              << '\n';
    code = kNegative;
  }
  if (report) {
    std::cout << "menger-criterion="
              << (report->embeddable ? "EMBEDDABLE" : "NOT-EMBEDDABLE")
              << " r=" << report->evaluated_dimension << " base="
              << (report->base_subset ? subset_string(*report->base_subset)
                                      : std::string("none"))
              << " nonflat(r+2)=" << report->nonflat_plus2.size()
              << " nonflat(r+3,base)="
              << report->nonflat_plus3_containing_base.size()
              << " nonflat(r+3,all)=" << report->nonflat_plus3_all.size() << '\n';
  } else {
    std::cout << "menger-criterion=SKIPPED (more than "
              << distgeom::kMaxMengerSize << " points)\n";
  }
  return code;
}

std::optional<int> parse_sign(const std::string& token) {
  if (token == "+" || token == "+1" || token == "1") return 1;
  if (token == "-" || token == "-1") return -1;
  if (token == "0" || token == "+0" || token == "-0") return 0;
  return std::nullopt;
}

int cmd_signs(const Options& o) {
  std::vector<int> entries;
  for (const auto& arg : o.signs) {
    std::stringstream parts(arg);
    std::string token;
    while (std::getline(parts, token, ',')) {
      if (token.empty()) continue;
      const auto v = parse_sign(token);
      if (!v) {
        std::cerr << "error: not a sign: '" << token << "'\n";
        return kInputError;
      }
      entries.push_back(*v);
    }
  }
  const std::size_t changes =
      distgeom::cyclic_sign_changes(distgeom::CyclicSignSequence(entries));
  std::cout << changes << (changes % 2 == 0 ? " even" : " odd") << '\n';
  return kOk;
}

int cmd_euler(const Options& o) {
  const distgeom::PolyhedralCounts c{o.counts[0], o.counts[1], o.counts[2]};
  const bool holds = distgeom::euler_characteristic_holds(c);
  std::cout << "chi=" << distgeom::euler_characteristic(c)
            << (holds ? " HOLDS" : " FAILS") << '\n';
  return holds ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance geometry toolkit"};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&) = nullptr;

  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "rank / flatness threshold override");
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("matrix_file", o.matrix_file, "distance matrix file")
        ->required();
  };

  auto* check = app.add_subcommand("check-edm", "classify a distance matrix");
  add_file(check);
  add_tol(check);
  check->callback([&] { handler = cmd_check_edm; });

  auto* mds = app.add_subcommand("mds", "classical multidimensional scaling");
  add_file(mds);
  add_tol(mds);
  mds->add_option("--dim", o.dim, "maximum output dimension");
  mds->add_option("--out", o.out, "coordinates output file");
  mds->callback([&] { handler = cmd_mds; });

  auto* volume = app.add_subcommand("volume", "simplex volume from side lengths");
  add_file(volume);
  add_tol(volume);
  volume->callback([&] { handler = cmd_volume; });

  auto* heron = app.add_subcommand("heron", "triangle area from three sides");
  heron->add_option("sides", o.sides, "a b c")->required()->expected(3);
  heron->callback([&] { handler = cmd_heron; });

  auto* tri = app.add_subcommand("trilaterate", "locate a point from distances");
  tri->add_option("--anchors", o.anchors, "anchor coordinates file")->required();
  tri->add_option("--dists", o.dists, "comma-separated distances")->required();
  tri->add_option("--tol", o.tol, "relative distance tolerance");
  tri->callback([&] { handler = cmd_trilaterate; });

  auto* sphere = app.add_subcommand(
      "sphere-embed", "place a 4-point geodesic metric on a sphere");
  add_file(sphere);
  add_tol(sphere);
  sphere->callback([&] { handler = cmd_sphere_embed; });

  auto* menger = app.add_subcommand("menger", "embeddability in R^n");
  add_file(menger);
  add_tol(menger);
  menger->add_option("--dim", o.dim, "target dimension n")->required();
  menger->callback([&] { handler = cmd_menger; });

  auto* signs = app.add_subcommand("signs", "count cyclic sign changes");
  signs->add_option("signs", o.signs, "signs: + - 0 or +1 -1 0")->required();
  signs->callback([&] { handler = cmd_signs; });

  auto* euler = app.add_subcommand("euler", "check V - E + F = 2");
  euler->add_option("counts", o.counts, "V E F")->required()->expected(3);
  euler->callback([&] { handler = cmd_euler; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return handler(o);
  } catch (const distgeom::io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const distgeom::Error& e) {
    std::cerr << "error: " << distgeom::to_string(e.kind()) << ": " << e.what()
              << '\n';
  }
  return kInputError;
}
