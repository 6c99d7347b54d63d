#pragma once

#include <memory>
#include <string>
#include <vector>

#include "aslsim/layouts.hpp"
#include "aslsim/netlist.hpp"
#include "aslsim/solver.hpp"

namespace aslsim {

enum class GateKind { Inv, Buf, Maj, And, Or, Nand, Nor };
enum class Scheme { Conventional, Stem };
enum class Phase { Init, Eval };

std::string to_string(GateKind k);
std::string to_string(Scheme s);
GateKind gate_kind_from_string(const std::string& s);

/// Signed net output drive plus the supply charge budget of one phase.
/// drive > 0 pushes the output magnet toward logic 1.
struct PhaseResult {
    double drive = 0.0;   // A, net spin current into the output magnet
    double charge = 0.0;  // A, sum of |I_c| over driving branches
    int vote = 0;         // combinatorial (#toward-1 - #toward-0) of drivers
};

enum class BranchRole { Live, Fixed, Init };

namespace detail {
/// Assembled netlist with a cached factorization; source values vary per
/// solve, the conductance matrix never does.
class StampedNetwork;
}  // namespace detail

/// An immutable ASL star gate: input branches (ferromagnet + ground strap +
/// channel arm) meeting at a junction that feeds the grounded output magnet.
/// Logic values enter as supply polarities; magnetization stamps are fixed.
class GateInstance {
public:
    static GateInstance build(GateKind kind, Scheme scheme, int n,
                              const StarLayout& layout, const TechParams& tech,
                              double init_scale_q = 1.0);

    GateKind kind() const { return kind_; }
    Scheme scheme() const { return scheme_; }
    int fan_in() const { return n_; }
    bool stage_inverted() const;
    const TechParams& tech() const { return tech_; }
    const StarLayout& layout() const { return layout_; }
    double init_scale_q() const { return q_; }

    int live_branch_count() const;
    int fixed_branch_count() const;
    /// All input-side magnets including fixed and STEM init magnets.
    int input_magnet_count() const;

    int boolean_output(const std::vector<int>& inputs) const;
    /// Output value written during the STEM initialization phase.
    int init_value(const std::vector<int>& inputs) const;
    /// Inputs evaluated during STEM phase 2 (excludes the init-carried one).
    std::vector<int> eval_inputs(const std::vector<int>& inputs) const;

    PhaseResult evaluate_phase(Phase phase, const std::vector<int>& inputs) const;
    /// Conventional single-shot evaluation (all live + fixed branches driven).
    PhaseResult evaluate_conventional(const std::vector<int>& inputs) const;

    /// |drive| of one live branch pushing logic 1 alone, everything else 0 V.
    double unit_current() const;
    /// |drive| of the init branch driving alone.
    double init_unit_current() const;

    /// Net drive decomposed into per-branch single-source solves; used by the
    /// superposition oracle.
    std::vector<double> per_branch_drives(Phase phase,
                                          const std::vector<int>& inputs) const;

    double footprint_area() const;  // nm^2

    const SpinNetlist& netlist() const;

    ~GateInstance();
    GateInstance(GateInstance&&) noexcept;
    GateInstance& operator=(GateInstance&&) noexcept;
    GateInstance(const GateInstance&) = delete;
    GateInstance& operator=(const GateInstance&) = delete;

private:
    GateInstance();

    struct Branch {
        BranchRole role = BranchRole::Live;
        int input_index = -1;  // Live: which logic input
        int fixed_value = 0;   // Fixed/Init constant
        int source_node = -1;
        int fm_element = -1;
    };

    std::vector<double> phase_voltages(Phase phase,
                                       const std::vector<int>& inputs) const;
    PhaseResult solve_with(const std::vector<double>& branch_volts) const;

    GateKind kind_ = GateKind::Buf;
    Scheme scheme_ = Scheme::Conventional;
    int n_ = 1;
    double q_ = 1.0;
    TechParams tech_;
    StarLayout layout_;
    std::vector<Branch> branches_;
    int output_element_ = -1;
    std::unique_ptr<detail::StampedNetwork> network_;
};

/// Layout lookup for a gate family: AND/NAND/OR/NOR share star sizes,
/// INV/BUF run on the reference layout.
GateLayoutPair layouts_for_gate(const LayoutLibrary& lib, GateKind kind, int n);

/// Boolean reference functions.
int boolean_reference(GateKind kind, const std::vector<int>& inputs);

/// Combinatorial worst-case |vote| over vectors that must switch the output
/// in STEM phase 2; returns 0 when no vector switches.
int stem_weakest_must_switch_vote(GateKind kind, int n);
/// Strongest |vote| among vectors that must NOT switch yet oppose the init
/// value; 0 when the eval pulse is unconstrained from above.
int stem_strongest_must_not_switch_vote(GateKind kind, int n);

}  // namespace aslsim
