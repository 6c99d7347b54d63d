#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "aslsim/gates.hpp"
#include "aslsim/layouts.hpp"

namespace aslsim {

/// STEM four-step sequence; the conventional scheme uses the two stages.
enum class AdderStep { InitCarry, EvalCarry, InitSum, EvalSum };

/// Five-magnet full adder (a, b, c_in, c_out, s_out) on one channel tree.
/// c_out is written by stage 1 and then drives s_out with its complement.
class AdderInstance {
public:
    static AdderInstance build(Scheme scheme, const StemAdderLayout& stem,
                               const ConvAdderLayout& conv, const TechParams& tech,
                               double balance_tolerance = 1e-3);

    Scheme scheme() const { return scheme_; }
    const TechParams& tech() const { return tech_; }

    /// STEM step evaluation. carry_state is the value stored in c_out
    /// (needed from step 3 on). drive sign: + pushes the step's target
    /// magnet toward logic 1.
    PhaseResult step(AdderStep s, int a, int b, int cin, int carry_state) const;

    /// Conventional stages (single-phase each).
    PhaseResult stage_carry(int a, int b, int cin) const;
    PhaseResult stage_sum(int a, int b, int cin, int carry_state) const;

    // single-source unit couplings (drives with one magnet at logic 1)
    double unit_input_to_sum() const;        // a -> s_out (== b, c_in by balance)
    double unit_input_b_to_sum() const;
    double unit_a_to_carry() const;
    double unit_bc_to_carry() const;
    double unit_carry_to_sum() const;

    double footprint_area() const;

    static std::pair<int, int> truth(int a, int b, int cin);  // (c_out, s_out)

    ~AdderInstance();
    AdderInstance(AdderInstance&&) noexcept;
    AdderInstance& operator=(AdderInstance&&) noexcept;
    AdderInstance(const AdderInstance&) = delete;
    AdderInstance& operator=(const AdderInstance&) = delete;

private:
    AdderInstance();

    struct Impl;
    Scheme scheme_ = Scheme::Stem;
    TechParams tech_;
    StemAdderLayout stem_layout_;
    ConvAdderLayout conv_layout_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace aslsim
