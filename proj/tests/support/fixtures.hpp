#pragma once

// Applicants whose raw attributes fuzzify to the crisp rows (2,8,8,6),
// (2,4,8,10) and (2,4,8,6) under the built-in tables.

#include <string>
#include <vector>

#include "bidik/registry/applicant.hpp"

namespace fixtures {

inline std::vector<bidik::registry::ApplicantRecord> worked_example() {
    return {
        {"10145001", "Angga", "Manajemen Informatika", 4, 2013, 3.55, 1'500'000, 4},
        {"0915110", "RODIAH", "Teknik Informatika", 6, 2013, 3.01, 6'000'000, 4},
        {"08141156", "SAGA", "Sistem Informasi", 4, 2013, 3.25, 6'000'000, 4},
    };
}

inline const char* worked_example_csv() {
    return "nama,nim,jurusan,semester,tahun,nilai,penghasilan,tanggungan\n"
           "Angga,10145001,Manajemen Informatika,4,2013,3.55,\"Rp1,500,000\",4\n"
           "RODIAH,0915110,Teknik Informatika,6,2013,3.01,6000000,4\n"
           "SAGA,08141156,Sistem Informasi,4,2013,3.25,\"6,000,000\",4\n";
}

}  // namespace fixtures
