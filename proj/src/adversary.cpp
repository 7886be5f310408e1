#include "qot/adversary.hpp"

#include <stdexcept>

namespace qot {

const char* strategy_name(const Strategy& strategy) noexcept {
    if (std::holds_alternative<Honest>(strategy))
        return "honest";
    if (std::holds_alternative<FixedAngles>(strategy))
        return "fixed-angles";
    return "storage";
}

bool BobAgent::receive(std::optional<Particle> first,
                       std::optional<Particle> second, RandomStream& rng) {
    // A failed round is re-run from scratch; nothing carries over.
    honest_axis_.reset();
    outcomes_.reset();
    stored_.reset();

    if (!first || !second)
        return false;

    if (std::holds_alternative<Honest>(strategy_)) {
        // One axis for both particles: x with probability 1/2, else y.
        honest_axis_ = rng.bernoulli(0.5) ? Basis::Horizontal : Basis::Vertical;
        const MeasurementAxis axis = basis_axis(*honest_axis_);
        const Outcome o1 = first->measure(axis, rng);
        const Outcome o2 = second->measure(axis, rng);
        outcomes_.emplace(o1, o2);
        return true;
    }
    if (const auto* fixed = std::get_if<FixedAngles>(&strategy_)) {
        const Outcome o1 = first->measure(fixed->alpha, rng);
        const Outcome o2 = second->measure(fixed->beta, rng);
        outcomes_.emplace(o1, o2);
        return true;
    }
    // Storage: hold both particles unmeasured until the reveal.
    stored_.emplace(std::move(*first), std::move(*second));
    return true;
}

BobConclusion BobAgent::conclude(Basis revealed, RandomStream& rng) {
    if (std::holds_alternative<Honest>(strategy_)) {
        if (!honest_axis_ || !outcomes_)
            throw std::logic_error("conclude without a successful delivery");
        BobConclusion c;
        c.axis_matched = (*honest_axis_ == revealed);
        if (c.axis_matched) {
            c.knows = true;
            c.inferred =
                decode(spin_sign(outcomes_->first), spin_sign(outcomes_->second));
        } else {
            // Orthogonal outcomes carry nothing; guess blind (one draw).
            c.knows = false;
            c.inferred = rng.bernoulli(0.5) ? OTBit::Plus : OTBit::Minus;
        }
        return c;
    }
    if (std::holds_alternative<FixedAngles>(strategy_)) {
        if (!outcomes_)
            throw std::logic_error("conclude without a successful delivery");
        return BobConclusion{
            false, cheating_inference(outcomes_->first, outcomes_->second),
            false};
    }
    if (!stored_)
        throw std::logic_error("conclude without a successful delivery");
    const MeasurementAxis axis = basis_axis(revealed);
    const Outcome o1 = stored_->first.measure(axis, rng);
    const Outcome o2 = stored_->second.measure(axis, rng);
    return BobConclusion{true, decode(spin_sign(o1), spin_sign(o2)), true};
}

OTBit storage_attack(const ParticlePair& pair, Basis revealed,
                     RandomStream& rng) {
    Particle first(pair.first());
    Particle second(pair.second());
    const MeasurementAxis axis = basis_axis(revealed);
    const Outcome o1 = first.measure(axis, rng);
    const Outcome o2 = second.measure(axis, rng);
    return decode(spin_sign(o1), spin_sign(o2));
}

Outcome ck_run(const CKProtocolInstance& instance,
               const MeasurementAxis& measure_axis,
               RandomStream& rng) noexcept {
    return sample_measurement(instance.theta, measure_axis, rng);
}

OTBit ck_optimal_guess(Outcome outcome, const MeasurementAxis& measure_axis,
                       Basis revealed) noexcept {
    // Uniform prior over the two signs on the revealed axis, so comparing
    // likelihoods compares posteriors. A genuine tie (orthogonal
    // measurement) can carry ~1e-16 of rounding noise, so ties are
    // detected with a tolerance; they break toward +1.
    constexpr double kTieTolerance = 1e-12;
    const double ap_plus =
        aligned_probability(direction(revealed, SpinSign::Plus), measure_axis);
    const double ap_minus =
        aligned_probability(direction(revealed, SpinSign::Minus), measure_axis);
    const double like_plus =
        outcome == Outcome::Aligned ? ap_plus : 1.0 - ap_plus;
    const double like_minus =
        outcome == Outcome::Aligned ? ap_minus : 1.0 - ap_minus;
    return like_plus >= like_minus - kTieTolerance ? OTBit::Plus
                                                   : OTBit::Minus;
}

} // namespace qot
