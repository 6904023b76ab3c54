#ifndef MINMAXHOM_JSON_IO_HPP
#define MINMAXHOM_JSON_IO_HPP

#include <string>

#include "minmaxhom/classify.hpp"
#include "minmaxhom/solver.hpp"

namespace minmaxhom {

/// JSON codecs for the stable wire formats. All emitters are deterministic
/// (sorted keys, compact layout, trailing newline-free).

std::string ordering_to_json(const KMinMaxOrdering& ord);
KMinMaxOrdering ordering_from_json(const std::string& text);

std::string certificate_to_json(const CircularChain& chain, int k);

std::string classification_to_json(const Classification& c);

CostInstance instance_from_json(const std::string& text, int template_size);
std::string instance_to_json(const CostInstance& inst);

std::string solution_to_json(const Solution& sol);

std::string verify_result_to_json(const VerifyResult& res);

}  // namespace minmaxhom

#endif
