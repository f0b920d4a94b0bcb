#include "pancake/formulas.hpp"

#include "pancake/errors.hpp"

namespace pancake {
namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

FormulaResult max_regions(ShapeKind kind, int k, long long n) {
  const CatalogEntry entry = catalog(kind, kind_parametric(kind) ? k : 0);
  FormulaResult out{1, entry.status};
  if (n == 0) {
    out.status = FormulaStatus::Exact;
    return out;
  }

  switch (kind) {
    case ShapeKind::Line:
      out.value = n * (n + 1) / 2 + 1;
      break;
    case ShapeKind::Hatpin:
      out.value = choose2(n) + 1;
      break;
    case ShapeKind::KArmedV:
      out.value = choose2(n) * k * k + n * (k - 1) + 1;
      break;
    case ShapeKind::KChain: {
      const long long kn = static_cast<long long>(k) * n;
      out.value = (kn * kn - 3 * kn) / 2 + 2 * n + 1;
      break;
    }
    case ShapeKind::LongA:
      out.value = (9 * n * n - 5 * n + 2) / 2;
      break;
    case ShapeKind::LongZ:
      out.value = (9 * n * n - 7 * n + 2) / 2;
      break;
    case ShapeKind::LongW:
      out.value = 8 * n * n - 7 * n + 1;
      break;
    case ShapeKind::ConstrainedL:
      out.value = (3 * n * n - n + 2) / 2;
      break;
    case ShapeKind::ConstrainedX:
      out.value = 2 * n * n + n + 1;
      break;
    case ShapeKind::ConstrainedH:
    case ShapeKind::ConstrainedPhi:
      out.value = (7 * n * n - n + 2) / 2;
      break;
    case ShapeKind::ConstrainedT: {
      const long long lambda = (n + 2) / 3;  // ceil(n / 3)
      out.value = 2 * n * n + n + 1 - lambda * n + 3 * choose2(lambda);
      break;
    }
    case ShapeKind::ConstrainedA:
      out.value = 10 * n * n / 3;
      break;
    case ShapeKind::ConvexPolygon:
      out.value = static_cast<long long>(k) * n * n - static_cast<long long>(k) * n + 2;
      break;
    case ShapeKind::ConcaveQuadrilateral:
      out.value = 2 * (2 * n - 1) * (2 * n - 1);
      break;
    case ShapeKind::Circle:
      out.value = n * n - n + 2;
      break;
    case ShapeKind::FigureEight:
      out.value = 4 * n * n - 3 * n + 2;
      break;
    case ShapeKind::Pentagram:
      out.value = 10 * n * n - 5 * n + 2;
      break;
    case ShapeKind::Hexagram:
      out.value = 2 * (6 * n * n - 3 * n + 1);
      break;
    case ShapeKind::Lollipop:
      out.value = (7 * n * n - 5 * n + 2) / 2;
      break;
  }
  return out;
}

long long crossing_bound(ShapeKind kind, int k, long long n) {
  const CatalogEntry entry = catalog(kind, kind_parametric(kind) ? k : 0);
  return n * entry.sigma + choose2(n) * entry.kappa;
}

Rat cpa(ShapeKind kind, int k, long long n) {
  if (n < 1) throw ValidationError("cpa: needs n >= 1");
  const CatalogEntry entry = catalog(kind, kind_parametric(kind) ? k : 0);
  return rat(2 * crossing_bound(kind, k, n), n * entry.arms);
}

std::vector<std::vector<long long>> emit_table(ShapeKind kind, int k_max, int n_max) {
  if (kind != ShapeKind::KArmedV && kind != ShapeKind::KChain) {
    throw UnknownKindError("emit_table: only the arm-parameterized families have tables");
  }
  std::vector<std::vector<long long>> table;
  for (int k = 1; k <= k_max; ++k) {
    std::vector<long long> row;
    for (int n = 0; n <= n_max; ++n) {
      row.push_back(max_regions(kind, k, n).value);
    }
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace pancake
