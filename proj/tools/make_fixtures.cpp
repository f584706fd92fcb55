//! Regenerates the JSON fixtures for the built-in groups and actions.
//! Usage: make_fixtures [output-dir]

#include <iostream>
#include <string>

#include "htoc/json_io.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    namespace groups = htoc::groups;
    namespace io = htoc::io;
    namespace orbit = htoc::orbit;
    try {
        auto put = [&](const std::string& name, const std::string& text) {
            io::write_file(dir + "/" + name, text);
            std::cout << dir << "/" << name << "\n";
        };
        put("sd18-group.json", io::group_json(groups::semidirect_zpn_z2_pc(3, 2)));
        put("sd54-group.json", io::group_json(groups::semidirect_zpn_z2_pc(3, 3)));
        put("z27-group.json", io::group_json(groups::elementary_abelian_pc(3, 3)));
        put("z8-group.json", io::group_json(groups::cyclic_pc(8)));
        put("z6-group.json",
            io::group_json(groups::direct_product_pc(groups::cyclic_pc(2),
                                                     groups::elementary_abelian_pc(3, 1))));
        put("sd6-natural-action.json", io::action_json(orbit::natural_semidirect_action(3, 1)));
        put("sd18-regular-action.json",
            io::action_json(orbit::regular_action(groups::semidirect_zpn_z2_pc(3, 2), "regular")));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
