#include "jayalab/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "jayalab/errors.hpp"

namespace jayalab {

namespace {

struct Piece {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Piece& other) const { return error < other.error; }
};

Piece evaluate_piece(const std::function<double(double)>& f, double a, double b)
{
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0.0, &err);
    return {a, b, v, err};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, std::size_t initial_pieces, std::size_t max_intervals)
{
    JAYALAB_EXPECTS(a < b, "integrate: empty interval");
    JAYALAB_EXPECTS(abs_tol > 0.0, "integrate: tolerance must be positive");
    initial_pieces = std::max<std::size_t>(initial_pieces, 1);

    std::priority_queue<Piece> heap;
    double total = 0.0;
    double error = 0.0;
    const double width = (b - a) / static_cast<double>(initial_pieces);
    for (std::size_t i = 0; i < initial_pieces; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = i + 1 == initial_pieces ? b : lo + width;
        const Piece p = evaluate_piece(f, lo, hi);
        total += p.value;
        error += p.error;
        heap.push(p);
    }

    while (error > abs_tol) {
        if (heap.size() >= max_intervals) {
            std::ostringstream msg;
            msg << "integrate: no convergence on [" << a << ", " << b << "] after " << heap.size()
                << " intervals (error estimate " << error << ", target " << abs_tol << ")";
            throw NumericError(msg.str());
        }
        const Piece worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Piece left = evaluate_piece(f, worst.a, mid);
        const Piece right = evaluate_piece(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to drop the drift accumulated by incremental updates.
    QuadratureResult out;
    out.intervals = heap.size();
    std::vector<Piece> pieces;
    pieces.reserve(heap.size());
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& l, const Piece& r) { return l.a < r.a; });
    for (const auto& p : pieces) {
        out.value += p.value;
        out.error_estimate += p.error;
    }
    return out;
}

} // namespace jayalab
