#include <fstream>
#include <iostream>

#include "recomb/reference_table.hpp"

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: gen_reference_table <table.json> <table.inc>\n";
        return 2;
    }
    try {
        auto entries = recomb::build_reference_table();
        recomb::verify_reference_table(entries);
        const std::string json = recomb::reference_table_json(entries);
        std::ofstream(argv[1]) << json;
        std::ofstream inc(argv[2]);
        inc << "const char* const kReferenceTableJson = R\"json(" << json << ")json\";\n";
        if (!inc) {
            std::cerr << "cannot write " << argv[2] << "\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "reference table generation failed: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
