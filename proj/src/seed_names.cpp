#include "equisumm/lexicon.hpp"

namespace equisumm {
namespace {

// Seed name lists bundled with the library; names_dir overrides them.
const std::vector<std::string_view> kMaleNames = {
    "aaron", "abraham", "adam", "adrian", "alan", "albert", "alejandro", "alexander",
    "allen", "alvin", "andre", "andrew", "angel", "anthony", "archie", "arnold",
    "arthur", "austin", "ben", "benjamin", "billy", "bobby", "brad", "bradley",
    "brandon", "brent", "brian", "bruce", "bryan", "cameron", "carl", "carlos",
    "cecil", "chad", "charles", "charlie", "chester", "christian", "christopher", "clarence",
    "claude", "clifford", "clinton", "clyde", "cody", "colin", "conor", "corey",
    "cory", "curtis", "dale", "dan", "daniel", "darrell", "darren", "darryl",
    "david", "dean", "declan", "dennis", "derek", "derrick", "dominic", "donald",
    "douglas", "duane", "dustin", "dwight", "dylan", "eddie", "edgar", "edward",
    "elijah", "elmer", "eric", "erik", "ethan", "eugene", "everett", "felix",
    "fernando", "finn", "floyd", "frank", "franklin", "fred", "gabe", "gabriel",
    "gary", "gene", "george", "gerald", "gilbert", "glen", "glenn", "gordon",
    "greg", "gregory", "harold", "harry", "harvey", "hector", "henry", "herman",
    "howard", "hugh", "ismael", "jack", "jacob", "james", "jamie", "jared",
    "jason", "javier", "jeff", "jeffery", "jeffrey", "jeremy", "jerome", "jerry",
    "jesse", "jessie", "jim", "joe", "john", "jonathan", "jorge", "jose",
    "joseph", "joshua", "juan", "justin", "karl", "keith", "kenneth", "kevin",
    "kyle", "lance", "larry", "lawrence", "leo", "leon", "leonard", "leslie",
    "lewis", "liam", "lloyd", "logan", "lonnie", "mack", "manuel", "marc",
    "marcus", "mark", "martin", "marvin", "mason", "mathew", "matthew", "maurice",
    "michael", "milton", "mitchell", "nathan", "nathaniel", "neil", "nicholas", "noah",
    "norman", "omar", "orlando", "oscar", "owen", "patrick", "paul", "pedro",
    "peter", "philip", "rafael", "ralph", "ramon", "randy", "raul", "raymond",
    "reginald", "ricardo", "richard", "rick", "robert", "roberto", "rodney", "roger",
    "roland", "ron", "ronald", "roy", "ruben", "russell", "ryan", "salvador",
    "samuel", "scott", "sean", "sergio", "seth", "shawn", "stanley", "stephen",
    "steve", "steven", "ted", "terry", "thomas", "tim", "timothy", "tony",
    "travis", "tyler", "tyrone", "vernon", "victor", "vincent", "wade", "walter",
    "warren", "wayne", "wesley", "william", "willie", "zachary",
};

const std::vector<std::string_view> kFemaleNames = {
    "abigail", "alexis", "alice", "allison", "amanda", "amber", "amy", "andrea",
    "angela", "ann", "anna", "annette", "ashley", "audrey", "barbara", "beatrice",
    "belinda", "bernice", "betty", "beverly", "bianca", "bonnie", "brenda", "brittany",
    "brooke", "camille", "carol", "carolyn", "cassandra", "catherine", "charlotte", "cheryl",
    "christina", "christine", "claudia", "colleen", "constance", "crystal", "cynthia", "daisy",
    "daniela", "danielle", "darlene", "dawn", "deborah", "debra", "denise", "diana",
    "diane", "dolores", "donna", "doris", "dorothy", "edith", "elaine", "eleanor",
    "elizabeth", "ella", "emily", "emma", "erica", "erin", "eva", "evelyn",
    "faith", "felicia", "flora", "frances", "gail", "gina", "gloria", "grace",
    "gwendolyn", "hannah", "harriet", "heather", "helen", "holly", "ingrid", "irene",
    "isabella", "ivy", "jacqueline", "jane", "janet", "janice", "jasmine", "jean",
    "jeanette", "jenna", "jennifer", "jessica", "joan", "jordan", "josephine", "joyce",
    "judith", "judy", "julia", "julie", "juliet", "kara", "karen", "katherine",
    "kathleen", "kathryn", "kathy", "katrina", "kayla", "kelly", "kendra", "kimberly",
    "kristen", "lacey", "lana", "lara", "laura", "lauren", "leah", "lena",
    "lila", "lillian", "linda", "lindsey", "lisa", "lois", "lori", "lorraine",
    "lucia", "lucille", "lydia", "mabel", "madison", "mae", "maggie", "marcia",
    "margaret", "maria", "marie", "marilyn", "martha", "mary", "maureen", "megan",
    "melanie", "melissa", "michelle", "miriam", "molly", "monica", "myrtle", "nadia",
    "nancy", "naomi", "natalie", "nicole", "nina", "nora", "norma", "olivia",
    "opal", "pamela", "patricia", "paula", "paulina", "pearl", "peggy", "penelope",
    "phyllis", "polly", "priscilla", "rachel", "ramona", "rebecca", "regina", "renee",
    "rhonda", "robin", "rosa", "rosalie", "rosemary", "roxanne", "ruth", "sabrina",
    "sadie", "samantha", "sandra", "sara", "sarah", "selena", "serena", "shannon",
    "sharon", "sheila", "shirley", "simone", "sonia", "sophia", "stacy", "stella",
    "stephanie", "summer", "susan", "susanna", "suzanne", "sybil", "sylvia", "talia",
    "tamara", "tanya", "teresa", "tessa", "theresa", "tiffany", "tracy", "uma",
    "ursula", "valerie", "vera", "veronica", "vicki", "victoria", "virginia", "vivian",
    "wanda", "wendy", "whitney", "willa", "yolanda", "yvonne",
};

}  // namespace

const std::vector<std::string_view>& seed_male_names() { return kMaleNames; }
const std::vector<std::string_view>& seed_female_names() { return kFemaleNames; }

}  // namespace equisumm
