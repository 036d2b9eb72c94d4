#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "medalforge/corpus_io.hpp"
#include "medalforge/util.hpp"

namespace medalforge {

enum class Split { train, validation, test };
const char* split_name(Split s);

struct SplitAssignment {
    std::map<std::string, Split> by_patient;
    SplitRatios ratios;
    uint64_t seed = 0;
};

struct MortalitySample {
    NoteRecord note;
    bool label = false;  // the note's admission outcome
};

// Keeps physician/nursing notes charted at least 24 hours (86,400 s,
// boundary included) before their admission's discharge time. A patient
// counts as surviving only if none of their input records carries
// died=true; surviving patients contribute at most four eligible notes,
// chosen by seeded per-patient shuffle, while died patients keep all of
// theirs. Output preserves input order.
std::vector<MortalitySample> select_mortality_notes(const std::vector<NoteRecord>& notes,
                                                    uint64_t seed);

inline constexpr int64_t kMortalityCutoffSeconds = 86400;
inline constexpr uint64_t kSurvivorNoteCap = 4;

bool mortality_note_eligible(const NoteRecord& note);

// Splits patients (not notes): within each outcome stratum, patients are
// ordered by id, shuffled with a stratum-keyed seeded stream, and sliced
// by floor allocation with the remainder going to train.
SplitAssignment stratified_patient_split(const std::map<std::string, bool>& patient_died,
                                         const SplitRatios& ratios, uint64_t seed);

// ICD code category prefix: first 3 characters, or 4 for E/V codes.
// Case-insensitive on input, uppercase on output; codes shorter than the
// cut come back whole. Empty codes are an argument error.
std::string group_icd(const std::string& code);

struct DiagnosisLabelSet {
    std::string admission_id;
    std::vector<std::string> grouped_codes;  // sorted, deduplicated, non-empty
};

struct DiagnosisLabels {
    std::map<std::string, DiagnosisLabelSet> by_admission;  // empty-label admissions dropped
    std::vector<std::string> vocabulary;                    // sorted grouped codes
    std::map<std::string, uint32_t> vocabulary_ids;         // code -> index in vocabulary
    uint64_t dropped_admissions = 0;
};

DiagnosisLabels build_diagnosis_labels(
    const std::map<std::string, std::vector<std::string>>& admission_codes);

}  // namespace medalforge
