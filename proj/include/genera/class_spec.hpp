#pragma once

#include <string>

#include "genera/rational.hpp"

namespace genera {

/// How the pair-weight mu is realized from its lower bound.
enum class MuMode {
    LeastInteger, // least integer satisfying mu(X,Y) >= 2(delta(X)+delta(Y))/gamma
};

/// Parameters of the derived two-sorted class: edge weight r in (0,1),
/// equivalence classes of size < N, and the granularity gamma = 1/q for
/// r = p/q in lowest terms.
struct AntiCollapseParams {
    Rational r;
    int n_bound = 2;
    Rational gamma;
    MuMode mu_mode = MuMode::LeastInteger;

    AntiCollapseParams() = default;
    AntiCollapseParams(Rational r_, int n_bound_) : r(r_), n_bound(n_bound_) {
        if (!(Rational(0) < r && r < Rational(1)))
            throw InputError("anti-collapse weight r must satisfy 0 < r < 1, got " + r.str());
        if (n_bound <= 1) throw InputError("anti-collapse class bound N must exceed 1");
        gamma = Rational(1, r.den());
    }
};

/// Which amalgamation class is in force.
///
///   KAlpha      — hereditarily non-negative predimension, extensions strong
///                 when no intermediate drops predimension.
///   KAlphaPlus  — hereditarily positive predimension, proper intermediates
///                 must strictly raise predimension.
///   AntiCollapse — the two-sorted derived class over KAlphaPlus(r).
struct ClassSpec {
    enum class Kind { KAlpha, KAlphaPlus, AntiCollapse };

    Kind kind = Kind::KAlpha;
    Rational alpha; // edge weight; equals params.r for AntiCollapse
    AntiCollapseParams params;

    static ClassSpec k_alpha(Rational alpha) {
        if (alpha < Rational(0)) throw InputError("alpha must be non-negative");
        ClassSpec s;
        s.kind = Kind::KAlpha;
        s.alpha = alpha;
        return s;
    }

    static ClassSpec k_alpha_plus(Rational alpha) {
        if (alpha < Rational(0)) throw InputError("alpha must be non-negative");
        ClassSpec s;
        s.kind = Kind::KAlphaPlus;
        s.alpha = alpha;
        return s;
    }

    static ClassSpec anti_collapse(Rational r, int n_bound) {
        ClassSpec s;
        s.kind = Kind::AntiCollapse;
        s.params = AntiCollapseParams(r, n_bound);
        s.alpha = s.params.r;
        return s;
    }

    bool strict() const { return kind != Kind::KAlpha; }
    bool is_star() const { return kind == Kind::AntiCollapse; }

    /// The spec dispatched on the graph reduct: AntiCollapse reduces to
    /// KAlphaPlus(r).
    ClassSpec reduct() const {
        return is_star() ? k_alpha_plus(alpha) : *this;
    }

    std::string str() const {
        switch (kind) {
            case Kind::KAlpha: return "kalpha:" + alpha.str();
            case Kind::KAlphaPlus: return "kplus:" + alpha.str();
            case Kind::AntiCollapse:
                return "star:" + params.r.str() + "," + std::to_string(params.n_bound);
        }
        return "?";
    }

    /// Parses "kalpha:A", "kplus:A", or "star:R,N".
    static ClassSpec parse(const std::string& text) {
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw InputError("bad class spec '" + text + "' (expected kalpha:A, kplus:A, or star:R,N)");
        std::string kind = text.substr(0, colon);
        std::string rest = text.substr(colon + 1);
        if (kind == "kalpha") return k_alpha(Rational::parse(rest));
        if (kind == "kplus") return k_alpha_plus(Rational::parse(rest));
        if (kind == "star") {
            auto comma = rest.find(',');
            if (comma == std::string::npos)
                throw InputError("star spec needs r and N, e.g. star:1/2,3");
            return anti_collapse(Rational::parse(rest.substr(0, comma)),
                                 static_cast<int>(Rational::parse(rest.substr(comma + 1)).num()));
        }
        throw InputError("unknown class kind '" + kind + "'");
    }
};

} // namespace genera
