#ifndef GSO_ERRORS_HPP
#define GSO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gso {

/// Error conditions surfaced by the library. The names match the ones used in
/// diagnostics and CLI output.
enum class errc {
    not_prime,
    degree_too_large,
    not_in_h,
    not_a_divisor,
    length_mismatch,
    cols_mismatch,
    duplicate_locator,
    zero_scale,
    zero_locator,
    zero_multiplier,
    budget_exceeded,
    bad_partition,
    block_witness_missing,
    no_base_code,
    embedding_failure,
    no_all_nonzero_solution,
    k_out_of_range,
    case_hypothesis_failed,
    gcd_mismatch,
    no_lambda_witness,
    bad_dimension,
    target_out_of_range,
    perturbation_exhausted,
    negative_parameter,
    base_mismatch,
    not_enough_locators,
    witness_not_in_h,
    precondition_violated,
    verification_failed,
    bad_document,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::degree_too_large: return "DegreeTooLarge";
        case errc::not_in_h: return "NotInH";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::cols_mismatch: return "ColsMismatch";
        case errc::duplicate_locator: return "DuplicateLocator";
        case errc::zero_scale: return "ZeroScale";
        case errc::zero_locator: return "ZeroLocator";
        case errc::zero_multiplier: return "ZeroMultiplier";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::bad_partition: return "BadPartition";
        case errc::block_witness_missing: return "BlockWitnessMissing";
        case errc::no_base_code: return "NoBaseCode";
        case errc::embedding_failure: return "EmbeddingFailure";
        case errc::no_all_nonzero_solution: return "NoAllNonzeroSolution";
        case errc::k_out_of_range: return "KOutOfRange";
        case errc::case_hypothesis_failed: return "CaseHypothesisFailed";
        case errc::gcd_mismatch: return "GcdMismatch";
        case errc::no_lambda_witness: return "NoLambdaWitness";
        case errc::bad_dimension: return "BadDimension";
        case errc::target_out_of_range: return "TargetOutOfRange";
        case errc::perturbation_exhausted: return "PerturbationExhausted";
        case errc::negative_parameter: return "NegativeParameter";
        case errc::base_mismatch: return "BaseMismatch";
        case errc::not_enough_locators: return "NotEnoughLocators";
        case errc::witness_not_in_h: return "WitnessNotInH";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::verification_failed: return "VerificationFailed";
        case errc::bad_document: return "BadDocument";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
   public:
    error(errc c, const std::string& what) : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool cond, errc c, const std::string& what) {
    if (!cond) fail(c, what);
}

}  // namespace gso

#endif
