#include "medalforge/splits_tasks.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "medalforge/rng.hpp"
#include "medalforge/text.hpp"

namespace medalforge {

const char* split_name(Split s) {
    switch (s) {
        case Split::train: return "train";
        case Split::validation: return "validation";
        default: return "test";
    }
}

bool mortality_note_eligible(const NoteRecord& note) {
    if (note.category != NoteCategory::physician && note.category != NoteCategory::nursing) {
        return false;
    }
    return note.chart_time <= note.discharge_time - kMortalityCutoffSeconds;
}

std::vector<MortalitySample> select_mortality_notes(const std::vector<NoteRecord>& notes,
                                                    uint64_t seed) {
    // Survival status is patient-level: any died admission marks the patient.
    std::unordered_map<std::string, bool> patient_died;
    for (const NoteRecord& n : notes) {
        auto [it, inserted] = patient_died.try_emplace(n.patient_id, n.died);
        if (!inserted) it->second = it->second || n.died;
    }

    std::unordered_map<std::string, std::vector<uint64_t>> eligible_by_patient;
    for (uint64_t i = 0; i < notes.size(); ++i) {
        if (mortality_note_eligible(notes[i])) {
            eligible_by_patient[notes[i].patient_id].push_back(i);
        }
    }

    std::vector<bool> keep(notes.size(), false);
    for (auto& [patient, idxs] : eligible_by_patient) {
        if (!patient_died.at(patient) && idxs.size() > kSurvivorNoteCap) {
            SplitMix64 gen(keyed_seed(seed, patient));
            seeded_shuffle(idxs, gen);
            idxs.resize(kSurvivorNoteCap);
        }
        for (uint64_t i : idxs) keep[i] = true;
    }

    std::vector<MortalitySample> out;
    for (uint64_t i = 0; i < notes.size(); ++i) {
        if (keep[i]) out.push_back({notes[i], notes[i].died});
    }
    return out;
}

SplitAssignment stratified_patient_split(const std::map<std::string, bool>& patient_died,
                                         const SplitRatios& ratios, uint64_t seed) {
    validate_ratios(ratios);
    if (patient_died.empty()) throw std::invalid_argument("no patients to split");

    SplitAssignment assignment;
    assignment.ratios = ratios;
    assignment.seed = seed;

    for (bool stratum : {false, true}) {
        std::vector<std::string> patients;
        for (const auto& [patient, died] : patient_died) {
            if (died == stratum) patients.push_back(patient);
        }
        if (patients.empty()) continue;
        SplitMix64 gen(keyed_seed(seed, stratum ? "died" : "survived"));
        seeded_shuffle(patients, gen);
        auto sizes = floor_allocation(patients.size(), ratios);
        size_t offset = 0;
        const Split splits[3] = {Split::train, Split::validation, Split::test};
        for (size_t p = 0; p < 3; ++p) {
            for (size_t k = 0; k < sizes[p]; ++k) {
                assignment.by_patient[patients[offset + k]] = splits[p];
            }
            offset += sizes[p];
        }
    }
    return assignment;
}

std::string group_icd(const std::string& code) {
    if (code.empty()) throw std::invalid_argument("ICD code must be non-empty");
    std::string upper;
    upper.reserve(code.size());
    for (char c : code) {
        upper.push_back(c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A') : c);
    }
    size_t cut = (upper[0] == 'E' || upper[0] == 'V') ? 4 : 3;
    if (upper.size() > cut) upper.resize(cut);
    return upper;
}

DiagnosisLabels build_diagnosis_labels(
    const std::map<std::string, std::vector<std::string>>& admission_codes) {
    DiagnosisLabels labels;
    std::unordered_set<std::string> vocab;
    for (const auto& [admission, codes] : admission_codes) {
        std::vector<std::string> grouped;
        for (const std::string& code : codes) {
            if (code.empty()) continue;
            grouped.push_back(group_icd(code));
        }
        std::sort(grouped.begin(), grouped.end());
        grouped.erase(std::unique(grouped.begin(), grouped.end()), grouped.end());
        if (grouped.empty()) {
            ++labels.dropped_admissions;
            continue;
        }
        for (const auto& g : grouped) vocab.insert(g);
        labels.by_admission.emplace(admission, DiagnosisLabelSet{admission, std::move(grouped)});
    }
    labels.vocabulary.assign(vocab.begin(), vocab.end());
    std::sort(labels.vocabulary.begin(), labels.vocabulary.end());
    for (uint32_t i = 0; i < labels.vocabulary.size(); ++i) {
        labels.vocabulary_ids[labels.vocabulary[i]] = i;
    }
    return labels;
}

}  // namespace medalforge
