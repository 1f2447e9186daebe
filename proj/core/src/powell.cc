// Copyright 2026 The quditev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quditev/powell.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace quditev {

std::vector<double> OptimizationTrace::running_best() const {
    std::vector<double> out;
    out.reserve(evaluations.size());
    double best = std::numeric_limits<double>::infinity();
    for (const TracePoint &p : evaluations) {
        if (std::isfinite(p.value)) {
            best = std::min(best, p.value);
        }
        out.push_back(best);
    }
    return out;
}

namespace {

constexpr double kGolden = 1.618033988749895;
constexpr double kGoldenSection = 0.3819660112501051;
constexpr double kGrowLimit = 110.0;
constexpr double kTiny = 1e-21;

class Evaluator {
   public:
    Evaluator(const Objective &f, std::size_t budget, OptimizationTrace &trace)
        : f_(f), budget_(budget), trace_(trace) {}

    bool stopped() const { return trace_.evaluations_used >= budget_ || non_finite_; }
    bool non_finite() const { return non_finite_; }

    std::optional<double> operator()(const std::vector<double> &x) {
        if (stopped()) {
            return std::nullopt;
        }
        const double v = f_(x);
        trace_.evaluations.push_back({x, v});
        ++trace_.evaluations_used;
        if (!std::isfinite(v)) {
            non_finite_ = true;
            return std::nullopt;
        }
        if (trace_.best_params.empty() || v < trace_.best_value) {
            trace_.best_value = v;
            trace_.best_params = x;
        }
        return v;
    }

   private:
    const Objective &f_;
    std::size_t budget_;
    OptimizationTrace &trace_;
    bool non_finite_ = false;
};

struct LineMin {
    double step = 0.0;
    double value = 0.0;
};

/// Bracket then Brent along x + s * dir. Never returns a point worse than s = 0.
class LineSearch {
   public:
    LineSearch(Evaluator &ev, const std::vector<double> &x, double fx, const std::vector<double> &dir,
               const PowellOptions &opts)
        : ev_(ev), x_(x), dir_(dir), opts_(opts), best_{0.0, fx}, point_(x.size()) {}

    LineMin run() {
        double norm = 0.0;
        for (double d : dir_) {
            norm += d * d;
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            return best_;
        }
        tol_ = opts_.line_tol / norm;

        double a = 0.0;
        double fa = best_.value;
        double b = opts_.initial_step;
        double c = 0.0;
        double fb = 0.0;
        double fc = 0.0;
        if (!eval(b, fb)) return best_;
        if (fb > fa) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
        c = b + kGolden * (b - a);
        if (!eval(c, fc)) return best_;
        while (fb > fc) {
            const double r = (b - a) * (fb - fc);
            const double q = (b - c) * (fb - fa);
            const double denom = 2.0 * std::copysign(std::max(std::abs(q - r), kTiny), q - r);
            double u = b - ((b - c) * q - (b - a) * r) / denom;
            const double ulim = b + kGrowLimit * (c - b);
            double fu = 0.0;
            if ((b - u) * (u - c) > 0.0) {
                if (!eval(u, fu)) return best_;
                if (fu < fc) {
                    a = b;
                    fa = fb;
                    b = u;
                    fb = fu;
                    break;
                }
                if (fu > fb) {
                    c = u;
                    fc = fu;
                    break;
                }
                u = c + kGolden * (c - b);
                if (!eval(u, fu)) return best_;
            } else if ((c - u) * (u - ulim) > 0.0) {
                if (!eval(u, fu)) return best_;
                if (fu < fc) {
                    b = c;
                    fb = fc;
                    c = u;
                    fc = fu;
                    u = c + kGolden * (c - b);
                    if (!eval(u, fu)) return best_;
                }
            } else if ((u - ulim) * (ulim - c) >= 0.0) {
                u = ulim;
                if (!eval(u, fu)) return best_;
            } else {
                u = c + kGolden * (c - b);
                if (!eval(u, fu)) return best_;
            }
            a = b;
            fa = fb;
            b = c;
            fb = fc;
            c = u;
            fc = fu;
        }
        brent(a, fa, b, fb, c, fc);
        return best_;
    }

   private:
    bool eval(double s, double &value) {
        if (used_ >= opts_.max_line_evaluations) {
            return false;
        }
        for (std::size_t k = 0; k < x_.size(); ++k) {
            point_[k] = x_[k] + s * dir_[k];
        }
        const std::optional<double> v = ev_(point_);
        ++used_;
        if (!v) {
            return false;
        }
        value = *v;
        if (value < best_.value) {
            best_ = {s, value};
        }
        return true;
    }

    // Brent's method seeded with the full bracket so the first step can be
    // parabolic.
    void brent(double a, double fa, double b, double fb, double c, double fc) {
        double lo = std::min(a, c);
        double hi = std::max(a, c);
        double x = b, fx = fb;
        double w = fa < fc ? a : c;
        double fw = fa < fc ? fa : fc;
        double v = fa < fc ? c : a;
        double fv = fa < fc ? fc : fa;
        double d = 0.0;
        double e = hi - lo;
        const double tol1 = tol_;
        const double tol2 = 2.0 * tol1;
        while (true) {
            const double xm = 0.5 * (lo + hi);
            if (std::abs(x - xm) <= tol2 - 0.5 * (hi - lo)) {
                return;
            }
            bool golden = true;
            if (std::abs(e) > tol1) {
                const double r = (x - w) * (fx - fv);
                double q = (x - v) * (fx - fw);
                double p = (x - v) * q - (x - w) * r;
                q = 2.0 * (q - r);
                if (q > 0.0) {
                    p = -p;
                }
                q = std::abs(q);
                const double etemp = e;
                e = d;
                if (!(std::abs(p) >= std::abs(0.5 * q * etemp) || p <= q * (lo - x) || p >= q * (hi - x))) {
                    d = p / q;
                    const double u = x + d;
                    if (u - lo < tol2 || hi - u < tol2) {
                        d = std::copysign(tol1, xm - x);
                    }
                    golden = false;
                }
            }
            if (golden) {
                e = x >= xm ? lo - x : hi - x;
                d = kGoldenSection * e;
            }
            const double u = std::abs(d) >= tol1 ? x + d : x + std::copysign(tol1, d);
            double fu = 0.0;
            if (!eval(u, fu)) {
                return;
            }
            if (fu <= fx) {
                if (u >= x) {
                    lo = x;
                } else {
                    hi = x;
                }
                v = w;
                fv = fw;
                w = x;
                fw = fx;
                x = u;
                fx = fu;
            } else {
                if (u < x) {
                    lo = u;
                } else {
                    hi = u;
                }
                if (fu <= fw || w == x) {
                    v = w;
                    fv = fw;
                    w = u;
                    fw = fu;
                } else if (fu <= fv || v == x || v == w) {
                    v = u;
                    fv = fu;
                }
            }
        }
    }

    Evaluator &ev_;
    const std::vector<double> &x_;
    const std::vector<double> &dir_;
    const PowellOptions &opts_;
    LineMin best_;
    std::vector<double> point_;
    double tol_ = 0.0;
    std::size_t used_ = 0;
};

void step_along(std::vector<double> &x, const std::vector<double> &dir, double s) {
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] += s * dir[k];
    }
}

}  // namespace

OptimizationTrace minimize(const Objective &objective, std::vector<double> x0, const PowellOptions &options,
                           const std::optional<std::vector<std::vector<double>>> &directions) {
    const std::size_t n = x0.size();
    if (n == 0) {
        throw std::invalid_argument("minimize: empty parameter vector");
    }
    if (options.budget < n + 1) {
        throw std::invalid_argument("minimize: budget " + std::to_string(options.budget) +
                                    " is below dimension + 1 = " + std::to_string(n + 1));
    }
    for (double v : x0) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("minimize: x0 must be finite");
        }
    }
    std::vector<std::vector<double>> dirs;
    if (directions) {
        dirs = *directions;
        if (dirs.size() != n) {
            throw std::invalid_argument("minimize: need one initial direction per dimension");
        }
        for (const auto &d : dirs) {
            if (d.size() != n) {
                throw std::invalid_argument("minimize: direction length mismatch");
            }
        }
    } else {
        dirs.assign(n, std::vector<double>(n, 0.0));
        for (std::size_t k = 0; k < n; ++k) {
            dirs[k][k] = 1.0;
        }
    }

    OptimizationTrace trace;
    Evaluator ev(objective, options.budget, trace);
    std::vector<double> x = std::move(x0);
    std::optional<double> start = ev(x);
    if (!start) {
        trace.reason = StopReason::NonFiniteValue;
        return trace;
    }
    double fx = *start;

    while (!ev.stopped()) {
        ++trace.sweeps;
        const double f_start = fx;
        const std::vector<double> x_start = x;
        double biggest_drop = 0.0;
        std::size_t biggest = 0;
        for (std::size_t i = 0; i < n && !ev.stopped(); ++i) {
            const double f_before = fx;
            const LineMin m = LineSearch(ev, x, fx, dirs[i], options).run();
            step_along(x, dirs[i], m.step);
            fx = m.value;
            if (f_before - fx > biggest_drop) {
                biggest_drop = f_before - fx;
                biggest = i;
            }
        }
        if (ev.stopped()) {
            break;
        }
        if (2.0 * (f_start - fx) <= options.ftol * (std::abs(f_start) + std::abs(fx)) + 1e-20) {
            trace.reason = StopReason::Converged;
            return trace;
        }
        std::vector<double> new_dir(n);
        std::vector<double> extrapolated(n);
        for (std::size_t k = 0; k < n; ++k) {
            new_dir[k] = x[k] - x_start[k];
            extrapolated[k] = x[k] + new_dir[k];
        }
        const std::optional<double> f_ext = ev(extrapolated);
        if (!f_ext) {
            break;
        }
        if (f_start > *f_ext) {
            const double a = f_start - fx - biggest_drop;
            const double b = f_start - *f_ext;
            const double t = 2.0 * (f_start - 2.0 * fx + *f_ext) * a * a - biggest_drop * b * b;
            if (t < 0.0) {
                const LineMin m = LineSearch(ev, x, fx, new_dir, options).run();
                step_along(x, new_dir, m.step);
                fx = m.value;
                dirs[biggest] = dirs.back();
                dirs.back() = new_dir;
            }
        }
    }
    trace.reason = ev.non_finite() ? StopReason::NonFiniteValue : StopReason::BudgetExhausted;
    return trace;
}

std::vector<std::vector<double>> restart_schedule(std::size_t dim, std::size_t n_restarts, Rng &rng) {
    if (n_restarts == 0) {
        throw std::invalid_argument("restart_schedule: need at least one restart");
    }
    std::vector<std::vector<double>> out(n_restarts, std::vector<double>(dim));
    for (auto &x : out) {
        for (double &v : x) {
            v = rng.uniform(0.0, 2.0 * std::numbers::pi);
        }
    }
    return out;
}

}  // namespace quditev
