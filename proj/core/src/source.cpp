#include "heatlab/source.hpp"

#include <cmath>

#include "heatlab/errors.hpp"
#include "heatlab/osgood.hpp"

namespace heatlab {

void validate(const SourceFunction& src) {
  if (const FujitaPower* fp = std::get_if<FujitaPower>(&src)) {
    if (!(fp->p > 1.0))
      throw InvalidQuery("source: power exponent must exceed 1");
    return;
  }
  if (const TableSource* tab = std::get_if<TableSource>(&src)) {
    if (tab->s.empty() || tab->s.size() != tab->f.size())
      throw InvalidQuery("source: table needs matching nonempty breakpoints");
    for (std::size_t i = 0; i < tab->s.size(); ++i) {
      if (!(tab->f[i] >= 0.0) || !std::isfinite(tab->f[i]))
        throw InvalidQuery("source: table values must be finite nonnegative");
      if (!(tab->s[i] >= 0.0))
        throw InvalidQuery("source: table abscissas must be nonnegative");
      if (i > 0 && !(tab->s[i] > tab->s[i - 1]))
        throw InvalidQuery("source: table abscissas must be increasing");
      if (i > 0 && tab->f[i] < tab->f[i - 1])
        throw InvalidQuery("source: table values must be nondecreasing");
    }
  }
}

SourceFunction make_source(SourceFunction src) {
  validate(src);
  return src;
}

double source_eval(const SourceFunction& src, double s) {
  if (!(s >= 0.0)) throw InvalidQuery("source_eval: negative state");
  if (const FujitaPower* fp = std::get_if<FujitaPower>(&src))
    return std::pow(s, fp->p);
  if (std::holds_alternative<BadOsgood>(src)) return bad_f_eval(s);
  const TableSource& tab = std::get<TableSource>(src);
  if (s <= tab.s.front()) return tab.f.front();
  if (s >= tab.s.back()) return tab.f.back();
  std::size_t hi = 1;
  while (tab.s[hi] < s) ++hi;
  const double w = (s - tab.s[hi - 1]) / (tab.s[hi] - tab.s[hi - 1]);
  return tab.f[hi - 1] + w * (tab.f[hi] - tab.f[hi - 1]);
}

}  // namespace heatlab
