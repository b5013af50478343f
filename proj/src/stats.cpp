#include "posat/stats.hpp"

#include <json.hpp>

namespace posat {

std::string SolveStats::to_json() const {
    nlohmann::json j;
    j["candidate_count_sum_when_multi"] = candidate_count_sum_when_multi;
    j["clause_checks"] = clause_checks;
    j["conflicts"] = conflicts;
    j["conflicts_multi_candidate"] = conflicts_multi_candidate;
    j["decisions"] = decisions;
    j["deleted"] = deleted;
    j["learned"] = learned;
    j["locally_saved_total"] = locally_saved_total;
    j["propagations"] = propagations;
    j["restarts"] = restarts;
    j["undone_total"] = undone_total;
    j["wall_time"] = wall_time;
    return j.dump();
}

}  // namespace posat
