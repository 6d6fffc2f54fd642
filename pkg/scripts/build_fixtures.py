#!/usr/bin/env python3
"""Regenerate the knowledge-graph fixtures shipped in src/pathweaver/data/.

physics_kg.json   30-concept mechanics/electricity graph with problems and misconception maps
perfect_kg.json   small graph whose problem stems repeat the concept descriptions verbatim,
                  so the mock retrieval providers link every stem to its concept exactly
"""
import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "pathweaver" / "data"

# id, name, level, description
CONCEPTS = [
    ("si_units", "SI units", 0, "SI units, measurement and dimensional analysis of physical quantities"),
    ("vectors", "Vectors", 0, "vectors: magnitude, direction, vector addition and resolution into components"),
    ("kinematics_1d", "Linear kinematics", 1, "displacement, velocity and acceleration for motion in a straight line"),
    ("free_fall", "Free fall", 2, "free fall motion of a dropped object under constant gravitational acceleration g"),
    ("projectile", "Projectile motion", 3, "projectile motion combining constant horizontal velocity with vertical free fall"),
    ("circular_motion", "Circular motion", 3, "uniform circular motion, centripetal acceleration and angular velocity"),
    ("newton_first", "Newton's first law", 2, "Newton's first law: inertia and balanced forces keep velocity constant"),
    ("newton_second", "Newton's second law", 3, "Newton's second law: net force equals mass times acceleration"),
    ("newton_third", "Newton's third law", 4, "Newton's third law: action and reaction force pairs act on different bodies"),
    ("friction", "Friction", 4, "static and kinetic friction force and the coefficient of friction"),
    ("gravitation", "Universal gravitation", 4, "Newton's law of universal gravitation between two masses, inverse square of distance"),
    ("orbits", "Orbits", 5, "satellite orbits, orbital speed and orbital period of planets"),
    ("work", "Work", 4, "work done by a force along a displacement, force times distance"),
    ("kinetic_energy", "Kinetic energy", 5, "kinetic energy one half m v squared and the work-energy theorem"),
    ("potential_energy", "Potential energy", 5, "gravitational potential energy mgh and elastic spring potential energy"),
    ("energy_conservation", "Energy conservation", 6, "conservation of mechanical energy when kinetic and potential energy exchange"),
    ("power", "Power", 5, "power as the rate of doing work, watts, and efficiency of machines"),
    ("momentum", "Momentum", 4, "linear momentum mass times velocity and impulse of a force over time"),
    ("momentum_conservation", "Momentum conservation", 5, "conservation of momentum in collisions and explosions"),
    ("shm", "Simple harmonic motion", 7, "simple harmonic motion of a mass on a spring and a simple pendulum, period and amplitude"),
    ("waves", "Waves", 8, "mechanical waves: wavelength, frequency, period and wave speed"),
    ("sound", "Sound", 9, "sound waves, pitch, loudness, echoes and the Doppler effect"),
    ("electric_charge", "Electric charge", 1, "electric charge, conductors and insulators, Coulomb's law of electrostatic force"),
    ("electric_field", "Electric field", 2, "electric field strength and electric field lines around charges"),
    ("electric_potential", "Electric potential", 6, "electric potential, potential difference and voltage between two points"),
    ("current", "Electric current", 2, "electric current as the rate of flow of charge, amperes"),
    ("ohms_law", "Ohm's law", 7, "Ohm's law relating voltage, current and resistance of a resistor"),
    ("circuits", "Circuits", 8, "series and parallel circuits and equivalent resistance of resistors"),
    ("magnetic_field", "Magnetic field", 3, "magnetic field and magnetic force on a current-carrying wire"),
    ("induction", "Electromagnetic induction", 9, "electromagnetic induction, changing magnetic flux and Faraday's law of induced emf"),
]

EDGES = [
    ("si_units", "kinematics_1d"), ("vectors", "kinematics_1d"), ("si_units", "electric_charge"),
    ("kinematics_1d", "free_fall"), ("free_fall", "projectile"), ("vectors", "projectile"),
    ("kinematics_1d", "circular_motion"), ("kinematics_1d", "newton_first"),
    ("newton_first", "newton_second"), ("newton_second", "newton_third"), ("newton_second", "friction"),
    ("newton_second", "circular_motion"), ("circular_motion", "orbits"), ("newton_second", "gravitation"),
    ("gravitation", "orbits"), ("newton_second", "work"), ("vectors", "work"),
    ("work", "kinetic_energy"), ("work", "potential_energy"), ("free_fall", "potential_energy"),
    ("kinetic_energy", "energy_conservation"), ("potential_energy", "energy_conservation"),
    ("work", "power"), ("newton_second", "momentum"), ("kinematics_1d", "momentum"),
    ("newton_third", "momentum_conservation"), ("momentum", "momentum_conservation"),
    ("energy_conservation", "shm"), ("newton_second", "shm"), ("shm", "waves"), ("waves", "sound"),
    ("electric_charge", "electric_field"), ("vectors", "electric_field"),
    ("electric_field", "electric_potential"), ("potential_energy", "electric_potential"),
    ("electric_charge", "current"), ("current", "ohms_law"), ("electric_potential", "ohms_law"),
    ("ohms_law", "circuits"), ("current", "magnetic_field"), ("vectors", "magnetic_field"),
    ("magnetic_field", "induction"), ("circuits", "induction"), ("friction", "work"),
]

# concept -> list of misconception descriptions
MISCONCEPTIONS = {
    "si_units": ["mixing units such as grams with kilograms without converting"],
    "vectors": ["adding vector magnitudes directly while ignoring direction",
                "thinking a vector component can exceed the vector magnitude"],
    "kinematics_1d": ["confusing velocity with acceleration so zero velocity means zero acceleration"],
    "free_fall": ["believing heavier objects fall faster in free fall"],
    "projectile": ["thinking horizontal velocity decreases during projectile flight"],
    "circular_motion": ["believing a centrifugal force pushes outward in circular motion"],
    "newton_first": ["believing a force is needed to keep an object moving at constant velocity"],
    "newton_second": ["treating force as proportional to velocity instead of acceleration"],
    "newton_third": ["thinking action and reaction forces cancel because they act on the same body"],
    "friction": ["believing friction always opposes motion of the object as a whole rather than relative sliding"],
    "gravitation": ["thinking gravity disappears in space far from the earth"],
    "orbits": ["believing satellites need thrust to stay in orbit"],
    "work": ["counting work for a force perpendicular to the displacement"],
    "kinetic_energy": ["thinking kinetic energy doubles when speed doubles"],
    "potential_energy": ["measuring height for potential energy from an arbitrary point inconsistently"],
    "energy_conservation": ["ignoring energy lost to friction when applying conservation of energy"],
    "power": ["confusing power with energy or work done"],
    "momentum": ["treating momentum as a scalar without direction"],
    "momentum_conservation": ["thinking momentum is not conserved in inelastic collisions"],
    "shm": ["believing the period of a pendulum depends on its mass"],
    "waves": ["thinking wave speed increases when frequency increases in the same medium"],
    "sound": ["believing sound can travel through a vacuum"],
    "electric_charge": ["thinking charge is created when objects are rubbed together"],
    "electric_field": ["believing field lines show the path a charge must follow"],
    "electric_potential": ["confusing electric potential with electric potential energy"],
    "current": ["believing current is used up by a bulb in a circuit"],
    "ohms_law": ["thinking resistance changes with the applied voltage for an ohmic resistor"],
    "circuits": ["believing adding resistors in parallel increases total resistance"],
    "magnetic_field": ["thinking a magnetic field exerts force on a stationary charge"],
    "induction": ["believing a constant magnetic field induces a steady current"],
}

# (problem id, stem, linked concepts, difficulty, correct option, [incorrect options]);
# incorrect options paired with misconception indices of the first linked concept, or None
PROBLEMS = [
    ("p01", "Convert a measured mass of 350 grams into SI units of kilograms.", ["si_units"], 0.15,
     "0.35 kg", [("350 kg", 0), ("3.5 kg", 0), ("35 kg", None)]),
    ("p02", "Which SI base unit is used to measure electric current and charge flow?", ["si_units", "current"], 0.25,
     "ampere", [("volt", None), ("coulomb per volt", 0), ("ohm", None)]),
    ("p03", "Two forces of 3 N east and 4 N north act together. Find the magnitude of the resultant vector.", ["vectors"], 0.3,
     "5 N", [("7 N", 0), ("1 N", 0), ("12 N", None)]),
    ("p04", "Resolve a 10 N vector at 30 degrees into horizontal and vertical components.", ["vectors"], 0.35,
     "8.7 N and 5 N", [("12 N and 5 N", 1), ("10 N and 10 N", 1), ("5 N and 5 N", None)]),
    ("p05", "A car speeds up uniformly from rest to 20 m/s in 5 s along a straight road. What is its acceleration?", ["kinematics_1d"], 0.3,
     "4 m/s^2", [("100 m/s^2", None), ("0 m/s^2 since it started at rest", 0), ("20 m/s^2", None)]),
    ("p06", "At the top of its motion a ball thrown straight up has zero velocity. What is its acceleration there?", ["kinematics_1d", "free_fall"], 0.45,
     "9.8 m/s^2 downward", [("zero acceleration because velocity is zero", 0), ("9.8 m/s^2 upward", None), ("it depends on the mass", None)]),
    ("p07", "A heavy stone and a light pebble are dropped together from the same height with no air resistance. Which lands first in free fall?", ["free_fall"], 0.3,
     "both land together", [("the heavy stone", 0), ("the light pebble", None), ("it depends on the shape", None)]),
    ("p08", "An object is dropped from rest and falls freely for 3 s. How far does it fall with g = 10 m/s^2?", ["free_fall"], 0.4,
     "45 m", [("30 m", None), ("90 m", None), ("15 m", 0)]),
    ("p09", "A ball is launched horizontally from a cliff. What happens to its horizontal velocity during projectile flight?", ["projectile"], 0.45,
     "it stays constant", [("it decreases steadily", 0), ("it increases", None), ("it becomes zero at the top", 0)]),
    ("p10", "A projectile is fired at 45 degrees. Combine horizontal and vertical motion to find the time of flight.", ["projectile", "vectors"], 0.6,
     "2 v sin45 / g", [("v / g", 0), ("v cos45 / g", None), ("2 v / g", None)]),
    ("p11", "A car moves around a circular track at constant speed. What direction is its centripetal acceleration?", ["circular_motion"], 0.45,
     "toward the center", [("outward from the center", 0), ("along the velocity", None), ("zero since speed is constant", None)]),
    ("p12", "Compute the angular velocity of a wheel making 2 revolutions per second in uniform circular motion.", ["circular_motion"], 0.5,
     "4 pi rad/s", [("2 rad/s", None), ("pi rad/s", None), ("outward force of 2 N", 0)]),
    ("p13", "A puck slides on frictionless ice at constant velocity. What net force acts on it according to inertia?", ["newton_first"], 0.3,
     "zero net force", [("a forward force equal to its motion", 0), ("a backward force", None), ("its weight only", None)]),
    ("p14", "Balanced forces act on a moving cart. Describe its velocity.", ["newton_first"], 0.25,
     "constant velocity", [("it slows down and stops", 0), ("it speeds up", None), ("it must be at rest", 0)]),
    ("p15", "A net force of 12 N acts on a 3 kg mass. Find the acceleration using net force equals mass times acceleration.", ["newton_second"], 0.35,
     "4 m/s^2", [("36 m/s^2", None), ("4 m/s", 0), ("0.25 m/s^2", None)]),
    ("p16", "Doubling the net force on a cart while its mass stays fixed changes its acceleration how?", ["newton_second"], 0.4,
     "acceleration doubles", [("velocity doubles", 0), ("acceleration halves", None), ("no change", None)]),
    ("p17", "A book rests on a table. Identify the reaction force pair to the earth's gravitational pull on the book.", ["newton_third"], 0.55,
     "the book pulls the earth upward", [("the table pushes the book up", 0), ("the book pushes the table down", None), ("there is none", None)]),
    ("p18", "A rifle recoils when fired. Explain the action and reaction forces on bullet and rifle.", ["newton_third", "momentum_conservation"], 0.6,
     "equal and opposite forces on different bodies", [("the forces cancel so nothing moves", 0), ("the bullet force is larger", None), ("only the bullet feels a force", None)]),
    ("p19", "A 5 kg box is pushed across a floor with coefficient of kinetic friction 0.2. Find the friction force.", ["friction"], 0.5,
     "9.8 N", [("1 N", None), ("49 N", None), ("friction acts forward", 0)]),
    ("p20", "A box rests on a slope without sliding. Which friction force acts on it: static or kinetic friction?", ["friction"], 0.55,
     "static friction up the slope", [("kinetic friction down the slope", 0), ("no friction", None), ("static friction down the slope", 0)]),
    ("p21", "If the distance between two masses triples, how does the gravitational force change under the inverse square law?", ["gravitation"], 0.55,
     "it becomes one ninth", [("it becomes one third", None), ("it triples", None), ("it disappears", 0)]),
    ("p22", "Astronauts in the space station appear weightless. Is universal gravitation acting on them?", ["gravitation", "orbits"], 0.6,
     "yes, gravity provides their orbital acceleration", [("no, gravity is zero in space", 0), ("only when they touch the walls", None), ("only at night", None)]),
    ("p23", "A satellite orbits the earth at constant speed. What keeps it in orbit without thrust?", ["orbits"], 0.6,
     "gravity supplies the centripetal force", [("its rocket engines", 0), ("centrifugal force", None), ("no force", None)]),
    ("p24", "How does the orbital period of a planet change with larger orbital radius?", ["orbits"], 0.7,
     "the period increases", [("the period decreases", None), ("the period is unchanged", None), ("the planet needs thrust", 0)]),
    ("p25", "A 20 N force pushes a crate 3 m along the floor in the force direction. How much work is done?", ["work"], 0.35,
     "60 J", [("6.7 J", None), ("23 J", None), ("0 J", 0)]),
    ("p26", "A waiter carries a tray horizontally at constant speed. How much work does the upward supporting force do?", ["work"], 0.55,
     "zero work", [("positive work equal to weight times distance", 0), ("negative work", None), ("work equals tray mass", None)]),
    ("p27", "A 2 kg cart moves at 3 m/s. Calculate its kinetic energy one half m v squared.", ["kinetic_energy"], 0.35,
     "9 J", [("6 J", None), ("18 J", 0), ("3 J", None)]),
    ("p28", "If the speed of a car doubles, by what factor does its kinetic energy change?", ["kinetic_energy"], 0.45,
     "four times", [("two times", 0), ("unchanged", None), ("half", None)]),
    ("p29", "A 1 kg book is lifted 2 m onto a shelf. Find the gain in gravitational potential energy mgh.", ["potential_energy"], 0.35,
     "19.6 J", [("2 J", None), ("9.8 J", 0), ("39.2 J", 0)]),
    ("p30", "A spring with constant 200 N/m is compressed 0.1 m. What elastic potential energy is stored?", ["potential_energy"], 0.5,
     "1 J", [("20 J", None), ("10 J", 0), ("2 J", None)]),
    ("p31", "A roller coaster starts from rest at 20 m height. Use conservation of mechanical energy to find its speed at the bottom.", ["energy_conservation"], 0.6,
     "20 m/s", [("400 m/s", None), ("less because energy is always lost", 0), ("10 m/s", None)]),
    ("p32", "A pendulum swings with no air resistance. Where is kinetic energy greatest as kinetic and potential energy exchange?", ["energy_conservation", "shm"], 0.5,
     "at the lowest point", [("at the highest point", 0), ("everywhere equal", None), ("at the release point", None)]),
    ("p33", "A motor does 600 J of work in 3 s. What is its power in watts?", ["power"], 0.35,
     "200 W", [("1800 W", None), ("600 J", 0), ("3 W", None)]),
    ("p34", "A machine takes in 500 J and outputs 400 J of useful work. What is its efficiency?", ["power"], 0.45,
     "80 percent", [("125 percent", None), ("400 W", 0), ("20 percent", None)]),
    ("p35", "A 0.5 kg ball moves at 4 m/s. What is its linear momentum mass times velocity?", ["momentum"], 0.3,
     "2 kg m/s in the direction of motion", [("8 kg m/s", None), ("2 kg m/s with no direction", 0), ("0.125 kg m/s", None)]),
    ("p36", "A 10 N force acts for 0.5 s on a ball. What impulse does the force deliver over time?", ["momentum"], 0.45,
     "5 N s", [("20 N s", None), ("5 J", 0), ("10 N s", None)]),
    ("p37", "Two carts collide and stick together in an inelastic collision. Is total momentum conserved?", ["momentum_conservation"], 0.55,
     "yes, momentum is conserved", [("no, it is lost as heat", 0), ("only kinetic energy is conserved", None), ("only if they bounce", 0)]),
    ("p38", "A firework at rest explodes into two pieces. What is the total momentum after the explosion?", ["momentum_conservation"], 0.5,
     "zero", [("large and upward", 0), ("equal to the energy released", None), ("it cannot be known", None)]),
    ("p39", "A simple pendulum has length 1 m. What happens to its period if the bob mass doubles?", ["shm"], 0.5,
     "the period is unchanged", [("the period doubles", 0), ("the period halves", None), ("the amplitude doubles", None)]),
    ("p40", "A mass on a spring oscillates in simple harmonic motion. Where is its acceleration largest?", ["shm"], 0.6,
     "at maximum displacement", [("at the equilibrium position", None), ("it is constant", None), ("it depends on the mass of a pendulum", 0)]),
    ("p41", "A wave has frequency 5 Hz and wavelength 2 m. What is the wave speed?", ["waves"], 0.4,
     "10 m/s", [("2.5 m/s", None), ("7 m/s", None), ("faster if the frequency rises", 0)]),
    ("p42", "In the same medium, the frequency of a wave is doubled. What happens to its wavelength?", ["waves"], 0.55,
     "the wavelength halves", [("the wave speed doubles", 0), ("the wavelength doubles", None), ("nothing changes", None)]),
    ("p43", "An ambulance siren approaches you. How does the pitch you hear change by the Doppler effect?", ["sound"], 0.55,
     "the pitch is higher", [("the pitch is lower", None), ("no change", None), ("the sound travels through vacuum", 0)]),
    ("p44", "Can sound waves travel from the moon to the earth through space?", ["sound", "waves"], 0.45,
     "no, sound needs a medium", [("yes, sound travels through a vacuum", 0), ("only loud sounds", None), ("only at high pitch", None)]),
    ("p45", "Rubbing a balloon on hair gives it a negative electric charge. Where does the charge come from?", ["electric_charge"], 0.4,
     "electrons transfer from the hair", [("charge is created by rubbing", 0), ("protons move to the balloon", None), ("from the air", None)]),
    ("p46", "Two point charges are separated by distance r. How does the electrostatic force change when r doubles under Coulomb's law?", ["electric_charge"], 0.55,
     "it becomes one quarter", [("it halves", None), ("it doubles", None), ("new charge is created", 0)]),
    ("p47", "Sketch the electric field lines around a positive point charge. Which way do they point?", ["electric_field"], 0.45,
     "radially outward", [("radially inward", None), ("they show the path a charge must follow", 0), ("in circles", None)]),
    ("p48", "A charge of 2 C feels a force of 10 N. What is the electric field strength there?", ["electric_field"], 0.4,
     "5 N/C", [("20 N/C", None), ("12 N/C", None), ("the charge follows the line", 0)]),
    ("p49", "Moving 3 C of charge through a potential difference of 12 V requires how much energy?", ["electric_potential"], 0.5,
     "36 J", [("4 V", 0), ("12 J", 0), ("15 J", None)]),
    ("p50", "What is the potential difference or voltage between two points with potentials 9 V and 3 V?", ["electric_potential"], 0.4,
     "6 V", [("12 V", None), ("27 J", 0), ("3 V", None)]),
    ("p51", "A charge of 6 C flows past a point in 3 s. What is the electric current in amperes?", ["current"], 0.3,
     "2 A", [("18 A", None), ("0.5 A", None), ("less after the bulb", 0)]),
    ("p52", "Compare the current entering and leaving a bulb in a simple circuit.", ["current", "circuits"], 0.45,
     "they are equal", [("less current leaves because the bulb uses it up", 0), ("more current leaves", None), ("no current leaves", None)]),
    ("p53", "A resistor carries current 2 A with voltage 10 V across it. Use Ohm's law to find the resistance.", ["ohms_law"], 0.35,
     "5 ohm", [("20 ohm", None), ("0.2 ohm", None), ("it changes with voltage", 0)]),
    ("p54", "The voltage across an ohmic resistor doubles. What happens to the current and resistance?", ["ohms_law"], 0.5,
     "current doubles, resistance unchanged", [("resistance doubles", 0), ("current halves", None), ("both unchanged", None)]),
    ("p55", "Two 6 ohm resistors are connected in parallel. What is the equivalent resistance?", ["circuits"], 0.5,
     "3 ohm", [("12 ohm", 0), ("6 ohm", None), ("36 ohm", None)]),
    ("p56", "Three resistors of 2, 3 and 5 ohm are connected in series. Find the total resistance of the series circuit.", ["circuits"], 0.4,
     "10 ohm", [("1 ohm", 0), ("30 ohm", None), ("5 ohm", None)]),
    ("p57", "A wire carrying current sits in a magnetic field. What determines the direction of the magnetic force on the wire?", ["magnetic_field"], 0.6,
     "the current and field directions", [("the wire's mass", None), ("a stationary charge feels the force", 0), ("gravity", None)]),
    ("p58", "A stationary electron sits in a uniform magnetic field. What magnetic force acts on it?", ["magnetic_field"], 0.55,
     "no magnetic force", [("a force along the field", 0), ("a force opposite the field", 0), ("a circular force", None)]),
    ("p59", "A magnet is pushed into a coil. Why is an emf induced according to Faraday's law?", ["induction"], 0.6,
     "the magnetic flux through the coil changes", [("the magnet is stationary", 0), ("the coil has resistance", None), ("charge is created", None)]),
    ("p60", "A magnet rests motionless inside a coil. Is a current induced in the coil by electromagnetic induction?", ["induction", "magnetic_field"], 0.5,
     "no current, the flux is constant", [("yes, a steady current flows", 0), ("yes, an alternating current", None), ("only if the coil is heavy", None)]),
]


def physics_kg() -> dict:
    concepts = [{"id": cid, "name": name, "level": level, "description": desc}
                for cid, name, level, desc in CONCEPTS]
    misconceptions = []
    mis_ids = {}
    for cid, descs in MISCONCEPTIONS.items():
        for k, desc in enumerate(descs):
            mid = f"m_{cid}_{k}"
            mis_ids[(cid, k)] = mid
            misconceptions.append({"id": mid, "description": desc, "concept_id": cid})
    problems = []
    for pid, stem, linked, diff, correct, wrong in PROBLEMS:
        options = [correct] + [w for w, _ in wrong]
        mmap = {w: mis_ids[(linked[0], k)] for w, k in wrong if k is not None}
        problems.append({
            "id": pid, "stem": stem, "options": options, "correct_option": correct,
            "difficulty": diff, "linked_kp_ids": linked, "misconception_map": mmap,
        })
    return {
        "concepts": concepts,
        "edges": [{"from": a, "to": b} for a, b in EDGES],
        "problems": problems,
        "misconceptions": misconceptions,
    }


PERFECT = [
    ("a", "Atoms", 0, "atoms are built from protons neutrons and electrons"),
    ("b", "Bonds", 1, "chemical bonds share or transfer electrons between atoms"),
    ("c", "Compounds", 2, "compounds combine elements in fixed ratios"),
    ("d", "Density", 1, "density is mass divided by volume"),
    ("e", "Equations", 3, "balanced equations conserve every element"),
    ("f", "Formula mass", 3, "formula mass sums atomic masses in a formula"),
    ("g", "Gas laws", 2, "gas pressure rises with temperature at fixed volume"),
    ("h", "Heat", 4, "heat flows from hot bodies to cold bodies"),
]
PERFECT_EDGES = [("a", "b"), ("b", "c"), ("a", "d"), ("c", "e"), ("c", "f"), ("d", "g"), ("g", "h"),
                 ("e", "h"), ("f", "h")]


def perfect_kg() -> dict:
    concepts = [{"id": cid, "name": name, "level": level, "description": desc}
                for cid, name, level, desc in PERFECT]
    misconceptions = [{"id": f"m_{cid}", "description": f"wrong idea zz{cid}{cid} about {name.lower()}",
                       "concept_id": cid} for cid, name, _, _ in PERFECT]
    problems = []
    for i, (cid, name, level, desc) in enumerate(PERFECT):
        wrong = f"wrong idea zz{cid}{cid} about {name.lower()}"
        problems.append({
            "id": f"q{i}", "stem": desc, "options": ["right", wrong], "correct_option": "right",
            "difficulty": round(0.1 + 0.1 * level, 2), "linked_kp_ids": [cid],
            "misconception_map": {wrong: f"m_{cid}"},
        })
    return {
        "concepts": concepts,
        "edges": [{"from": a, "to": b} for a, b in PERFECT_EDGES],
        "problems": problems,
        "misconceptions": misconceptions,
    }


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, doc in (("physics_kg.json", physics_kg()), ("perfect_kg.json", perfect_kg())):
        (OUT / name).write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
        print(f"wrote {OUT / name}")


if __name__ == "__main__":
    main()
