#!/usr/bin/env python3
"""Regenerate the lexical resource snapshot shipped under src/advforge/data/.

Outputs:
  embeddings.txt   exactly 5000 words x 50 dims, standard "word v1 .. v50" text format
  pos_lexicon.tsv  word<TAB>coarse-tag, covering the embedding vocabulary plus
                   function words and auxiliaries
  antonyms.tsv     lemma<TAB>pos<TAB>antonym1,antonym2

The snapshot is synthetic: vectors are seeded-random unit vectors, except that a
curated set of word pairs gets planted neighborhoods (first and second nearest
neighbor) and number words lie on a smooth one-dimensional arc so that adjacent
numbers are mutual nearest neighbors. This gives the toolkit deterministic,
desk-scale lexical behavior without redistributing any third-party embedding
release. Rerunning this script reproduces the files byte-for-byte.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

OUT_DIR = Path(__file__).resolve().parents[1] / "src" / "advforge" / "data"
DIM = 50
VOCAB_SIZE = 5000
MASTER_SEED = 20240811

# ---------------------------------------------------------------------------
# Curated planted neighborhoods: (word, tag, [nearest, second-nearest]).
# Both neighbors are added to the vocabulary with the same tag.
# ---------------------------------------------------------------------------
PLANTED = [
    ("following", "NOUN", ["leading", "trailing"]),
    ("text", "NOUN", ["document", "page"]),
    ("passage", "NOUN", ["paragraph", "excerpt"]),
    ("statement", "NOUN", ["remark", "claim"]),
    ("statements", "NOUN", ["remarks", "claims"]),
    ("garden", "NOUN", ["orchard", "yard"]),
    ("community", "NOUN", ["neighborhood", "district"]),
    ("ship", "NOUN", ["boat", "vessel"]),
    ("ships", "NOUN", ["boats", "vessels"]),
    ("beam", "NOUN", ["ray", "signal"]),
    ("lighthouse", "NOUN", ["tower", "beacon"]),
    ("farmer", "NOUN", ["grower", "rancher"]),
    ("farmers", "NOUN", ["growers", "ranchers"]),
    ("hive", "NOUN", ["nest", "colony"]),
    ("hives", "NOUN", ["nests", "colonies"]),
    ("bee", "NOUN", ["wasp", "ant"]),
    ("bees", "NOUN", ["wasps", "ants"]),
    ("season", "NOUN", ["quarter", "term"]),
    ("service", "NOUN", ["operation", "schedule"]),
    ("passenger", "NOUN", ["traveller", "rider"]),
    ("passengers", "NOUN", ["travellers", "riders"]),
    ("railway", "NOUN", ["railroad", "tramway"]),
    ("mountain", "NOUN", ["hill", "peak"]),
    ("town", "NOUN", ["village", "city"]),
    ("bench", "NOUN", ["seat", "stool"]),
    ("benches", "NOUN", ["seats", "stools"]),
    ("park", "NOUN", ["meadow", "common"]),
    ("animal", "NOUN", ["creature", "beast"]),
    ("animals", "NOUN", ["creatures", "beasts"]),
    ("hour", "NOUN", ["minute", "moment"]),
    ("hours", "NOUN", ["minutes", "moments"]),
    ("campaign", "NOUN", ["movement", "drive"]),
    ("library", "NOUN", ["archive", "museum"]),
    ("club", "NOUN", ["society", "guild"]),
    ("chess", "NOUN", ["checkers", "backgammon"]),
    ("rock", "NOUN", ["stone", "boulder"]),
    ("volcano", "NOUN", ["crater", "geyser"]),
    ("plastic", "NOUN", ["rubber", "vinyl"]),
    ("ocean", "NOUN", ["sea", "gulf"]),
    ("thunder", "NOUN", ["rumble", "roar"]),
    ("flash", "NOUN", ["spark", "flare"]),
    ("lightning", "NOUN", ["hail", "sleet"]),
    ("air", "NOUN", ["wind", "breeze"]),
    ("week", "NOUN", ["fortnight", "month"]),
    ("name", "NOUN", ["title", "label"]),
    ("question", "NOUN", ["query", "riddle"]),
    ("answer", "NOUN", ["reply", "response"]),
    ("school", "NOUN", ["college", "academy"]),
    ("teacher", "NOUN", ["tutor", "instructor"]),
    ("student", "NOUN", ["pupil", "learner"]),
    ("students", "NOUN", ["pupils", "learners"]),
    ("children", "NOUN", ["kids", "youngsters"]),
    ("child", "NOUN", ["kid", "youngster"]),
    ("money", "NOUN", ["cash", "funds"]),
    ("produce", "NOUN", ["goods", "wares"]),
    ("material", "NOUN", ["substance", "matter"]),
    ("program", "NOUN", ["project", "scheme"]),
    ("recycling", "NOUN", ["composting", "salvage"]),
    ("keeper", "NOUN", ["warden", "caretaker"]),
    ("coast", "NOUN", ["shore", "seaside"]),
    ("furniture", "NOUN", ["cabinetry", "upholstery"]),
    ("barrier", "NOUN", ["fence", "screen"]),
    ("festival", "NOUN", ["fair", "carnival"]),
    ("kite", "NOUN", ["glider", "balloon"]),
    ("prize", "NOUN", ["award", "trophy"]),
    ("telescope", "NOUN", ["microscope", "binoculars"]),
    ("newspaper", "NOUN", ["journal", "gazette"]),
    ("newspapers", "NOUN", ["journals", "gazettes"]),
    ("aquarium", "NOUN", ["terrarium", "zoo"]),
    ("seahorse", "NOUN", ["starfish", "seashell"]),
    ("seahorses", "NOUN", ["starfishes", "seashells"]),
    ("market", "NOUN", ["bazaar", "mart"]),
    ("magma", "NOUN", ["lava", "basalt"]),
    ("baker", "NOUN", ["butcher", "grocer"]),
    ("bread", "NOUN", ["loaf", "dough"]),
    ("fox", "NOUN", ["wolf", "badger"]),
    ("desert", "NOUN", ["savanna", "steppe"]),
]

PROPER_PLANTED = [
    ("Smith", ["Jones", "Brown"]),
    ("Ortega", ["Ramirez", "Vargas"]),
    ("Maplewood", ["Oakdale", "Elmwood"]),
    ("Greenfield", ["Springfield", "Fairfield"]),
    ("Dale", ["Kirkby", "Thornby"]),
    ("London", ["Paris", "Berlin"]),
    ("Canada", ["Australia", "Norway"]),
    ("Marco", ["Paolo", "Luca"]),
    ("Lee", ["Kim", "Park"]),
    ("Tuesday", ["Wednesday", "Thursday"]),
    ("Friday", ["Saturday", "Monday"]),
    ("May", ["June", "April"]),
]

PROPER_EXTRA = [
    "Gull", "Point", "Elm", "Harbor", "Road", "Street", "Kirkby", "Ava", "Noah",
    "Clara", "Elena", "Omar", "Priya", "Ivan", "Rosa", "Hugo", "Nina", "Felix",
    "Iris", "Oscar", "Ruby", "Theo", "Vera", "Milo", "Eden", "Cole", "Dana",
    "Egypt", "Brazil", "Kenya", "Japan", "Chile", "India", "Spain", "Italy",
    "Sweden", "Poland", "Texas", "Ohio", "Utah", "Boston", "Chicago", "Denver",
    "Lisbon", "Madrid", "Vienna", "Prague", "Dublin", "Oslo", "Cairo", "Lima",
    "January", "February", "March", "July", "August", "September", "October",
    "November", "December", "Sunday", "Atlantic", "Pacific", "Amazon", "Nile",
    "Alps", "Andes", "Everest", "Sahara", "Europe", "Africa", "Asia",
]

NOUNS = """
time year day night morning evening noon sunrise sunset week month minute second
moment person people man woman boy girl family parent mother father sister brother
uncle aunt cousin neighbor friend guest stranger crowd team group club member
leader captain coach player winner loser champion judge referee
house home room kitchen bedroom bathroom hall door window roof wall floor ceiling
stair cellar attic garage garden yard fence gate path lawn shed barn cottage cabin
hut tent palace castle bridge tunnel road street lane avenue corner square market
shop store bakery butcher office factory mill farm field meadow orchard vineyard
forest wood tree branch leaf root trunk bark flower blossom petal seed grain crop
harvest grass weed bush hedge moss fern mushroom
river stream brook lake pond sea ocean wave tide shore beach sand cliff rock stone
pebble boulder cave island bay harbour port dock pier lighthouse
mountain hill valley plain desert dune glacier volcano crater canyon ridge slope
summit peak cliffside
sky cloud rain snow hail storm thunder lightning wind breeze gale fog mist frost
ice dew rainbow sunshine shadow temperature climate weather season spring summer
autumn winter
sun moon star planet comet meteor orbit galaxy universe space rocket satellite
telescope
animal bird fish insect mammal reptile horse cow sheep goat pig dog cat rabbit
mouse rat fox wolf bear deer moose elk lion tiger elephant giraffe zebra monkey
ape camel donkey mule chicken duck goose turkey swan eagle hawk owl crow raven
sparrow robin finch gull heron stork crane penguin seal whale dolphin shark cod
salmon trout herring crab lobster shrimp snail worm spider ant bee wasp beetle
moth butterfly dragonfly grasshopper cricket frog toad snake lizard turtle
body head face eye ear nose mouth lip tooth tongue chin cheek brow hair neck
shoulder arm elbow wrist hand finger thumb nail chest back waist hip leg knee
ankle foot toe heel skin bone muscle heart lung stomach brain blood voice breath
food meal breakfast lunch dinner supper snack bread loaf dough cake pie biscuit
cracker butter cheese cream milk yogurt egg meat beef pork lamb bacon sausage
ham chicken soup stew salad rice pasta noodle flour sugar salt pepper spice herb
sauce honey jam syrup fruit apple pear plum peach cherry grape berry strawberry
raspberry lemon orange banana melon coconut nut almond walnut vegetable potato
carrot onion garlic cabbage lettuce spinach bean pea corn tomato cucumber pumpkin
drink water juice tea coffee cocoa
cloth clothes coat jacket shirt blouse dress skirt trouser sock shoe boot sandal
hat cap scarf glove belt button pocket collar sleeve wool cotton silk leather
thread needle
tool hammer saw drill nail screw bolt wrench ladder rope chain wire blade knife
scissors axe shovel spade rake broom brush bucket basket box crate barrel jar
bottle can tin pot pan kettle cup mug glass plate bowl dish spoon fork tray
lamp candle torch lantern bell clock watch calendar map compass key lock hinge
handle lever wheel axle engine motor machine pump valve gear spring battery
switch cable plug socket bulb
paper page book chapter story tale poem novel magazine journal gazette letter
note card envelope stamp ink pen pencil crayon chalk board desk chair table
shelf drawer cupboard cabinet couch sofa bed pillow blanket sheet curtain carpet
rug mirror picture painting photograph frame statue
school college academy university classroom lesson class course subject grade
test exam quiz homework assignment essay report project experiment laboratory
science mathematics history geography music art language word sentence paragraph
letterform alphabet number fact idea thought opinion reason cause effect result
purpose plan goal aim method way manner habit custom tradition culture
teacher tutor instructor professor student pupil learner principal librarian
library archive museum theatre cinema concert stage audience ticket
game match race contest tournament championship sport football baseball tennis
golf hockey swimming skating skiing sailing fishing hunting camping hiking
picnic holiday vacation journey trip tour voyage travel adventure
work job task duty career trade craft skill talent business company firm
industry product goods wares service customer client price cost value profit
loss wage salary income tax budget bank account coin cash fund treasure wealth
market trade export import cargo freight
city village capital nation country state province region district county
border frontier land territory ground soil earth clay mud dust gravel mineral
metal iron steel copper brass bronze silver gold tin lead coal oil gas fuel
energy power electricity
health doctor nurse dentist patient medicine pill cure disease illness fever
cold cough wound injury bandage hospital clinic ambulance
law rule order court trial lawyer police officer guard soldier army navy fleet
weapon sword shield armor battle war peace victory defeat
government council mayor minister president king queen prince princess duke
lord lady citizen voter election
news message signal sign symbol mark label title name list menu recipe
instruction direction address route distance length width height depth weight
size shape circle square triangle line point edge surface side corner middle
center top bottom front rear
music song tune melody rhythm drum flute violin piano guitar trumpet horn
chorus choir band orchestra
color paint dye shade tone light darkness
fire flame smoke ash ember spark furnace oven stove chimney hearth
ship boat canoe raft ferry yacht vessel sail anchor deck cabin crew captain
sailor pilot pirate
train carriage wagon locomotive track platform station terminal
car truck lorry bus taxi bicycle motorcycle tractor trailer van cart sled
airplane aircraft helicopter glider balloon parachute airport runway
luggage suitcase backpack bag purse wallet
crowd queue meeting assembly committee conference lecture speech debate
discussion conversation argument promise secret joke riddle puzzle mystery
danger risk safety warning alarm emergency accident damage repair
beginning ending middlepoint past present future age era period century decade
memory dream hope fear joy sorrow anger pride shame surprise wonder courage
patience kindness honesty truth lie freedom justice honor fame glory luck
chance fortune fate
""".split()

VERBS = """
accept admire admit advise agree allow announce annoy answer appear approach
argue arrange arrive ask attack attempt attend avoid bake balance bark behave
believe belong bend bite blame bless block blow boil borrow bounce brake
breathe breed bring brush build burn burst bury buy calculate call camp care
carry catch cause celebrate change charge chase cheer choose claim clean clear
climb close collect combine come command compare compete complain complete
connect consider contain continue cook copy correct cough count cover crack
crash crawl create cross crush cry cut dance decide declare defend delay
deliver demand deny depart depend describe deserve design destroy develop dig
direct disagree disappear discover discuss divide donate drag draw dream dress
drift drill drink drive drop dry earn eat educate employ empty encourage end
enjoy enter escape examine excite excuse exercise exist expand expect explain
explode explore express extend fade fail fall farm fear feed feel fight fill
find finish fish fit fix flash float flood flow fly fold follow forbid force
forget forgive form found freeze frighten gain gather give glow go govern
grant greet grow guard guess guide hand hang happen harvest hate heal hear
heat help hide hike hire hit hold hope hunt hurry hurt imagine improve include
increase inform injure insist inspect inspire install intend interest
interrupt introduce invent invite join joke judge jump keep kick kill kiss
knock know land last laugh lay lead leak lean leap learn leave lend let lie
lift light like listen live load lock look lose love lower maintain make
manage march mark marry match matter measure meet melt mend mention mind miss
mix move multiply nail need notice obey object observe obtain occur offer open
order organize owe own pack paint park pass pause pay perform permit persuade
pick pile place plan plant play please point possess post pour practise praise
prefer prepare present preserve press pretend prevent print produce promise
pronounce protect prove provide publish pull pump punish push put question
queue race raise reach read realize receive recognize record recycle reduce
refer reflect refuse regard regret relax release remain remember remind remove
renew rent repair repeat replace reply report request require rescue rest
return reveal ride ring rise risk roll row rub ruin rule run rush sail satisfy
save saw say scare scatter scream search seat see seek seem sell send serve
settle sew shake share sharpen shelter shine shoot shop shout show shrink shut
sign signal sing sink sit ski skip sleep slide slip smell smile smoke sneeze
soak solve sort sound speak spell spend spill spin split spoil spread spring
sprinkle squeeze stand stare start starve stay steal steer step stick sting
stir stitch stop store stretch strike stroke struggle study stuff succeed suck
suffer suggest suit supply support suppose surround survive swallow sweep
swell swim swing take talk tame tap taste teach tear tease tell tend test
thank think throw tie tip touch tour trace trade train translate trap travel
treat tremble trick trim trust try turn twist type understand undress unite
unload unlock untie use vanish visit vote wait wake walk wander want warm warn
wash waste watch water wave wear weave weep weigh welcome whip whisper win
wind wipe wish wonder wrap wreck write
""".split()

ADJECTIVES = """
able absent active actual afraid alert alike alive alone ancient angry annual
anxious awake aware awful bare basic beautiful bent bitter blank blind blond
bloody blue bold brave brief bright brilliant broad broken brown busy calm
capable careful careless cheap cheerful chief chilly clean clear clever cloudy
clumsy coarse cold comfortable common complete complex cool correct costly
cozy crazy crisp crooked cruel curious curly curved cute damp dangerous dark
dead deaf dear decent deep dense dirty distant dizzy double drowsy dull dusty
eager early earnest east easy elderly electric elegant empty entire equal even
evil exact excellent extra faint fair faithful false familiar famous fancy far
fast fat fatal favorite feeble fertile fierce final fine firm fit flat fond
foolish foreign formal former fragile free frequent fresh friendly front full
funny futuristic gentle genuine giant gifted glad gloomy golden good grand
grateful grave gray great greedy green grim guilty handsome handy happy hard
harsh healthy heavy helpful helpless hidden high hollow holy honest hopeful
hot huge humble hungry icy ideal idle ill immediate immense important impossible
inner innocent intense itchy jealous jolly juicy junior keen kind large late
lazy leading lean legal level light likely little lively local lonely long
loose loud low loyal lucky mad main major mature mean medical medium meek
mellow merry messy mighty mild minor modern modest moist moral muddy mutual
naked narrow nasty native naval near neat nervous new nice noble noisy normal
north numb odd official old open opposite oral ordinary outer oval overdue
pale partial particular patient peaceful perfect personal plain pleasant plump
polite poor popular possible powerful precious pretty previous prime private
probable prompt proper proud public pure quick quiet rainy rapid rare raw ready
real recent regular remote rich right ripe rough round royal rude rural sad
safe salty sandy scarce scared secret secure senior separate serious severe
shallow sharp shiny short shy sick silent silly similar simple sincere single
skilled sleepy slight slim slippery slow small smart smooth snowy soft solar
sole solid sore sorry sour south spare special splendid steady steep stern
sticky stiff still strange strict strong stubborn sturdy sudden sunny superb
sure sweet swift tall tame tan tart tasty tender tense terrible thick thin
thirsty thorough tidy tight tiny tired top total tough tragic tropical
truthful typical ugly uneven unfair unique unknown upper upset urban urgent
useful useless usual vacant vague vain valid vast violent vital vivid warm
weak wealthy weary west wet whole wide wild willing windy wise witty wooden
wrong young
""".split()

ADVERBS = """
abroad actually afterwards almost already also always anywhere apart aside
away badly barely bravely briefly brightly briskly calmly carefully carelessly
certainly cheaply cheerfully clearly closely commonly completely constantly
correctly daily deeply definitely differently directly doubtless downstairs
downtown early easily elsewhere entirely equally especially eventually exactly
extremely fairly faithfully fast finally firmly firstly fluently fondly
forever formally forward frankly freely frequently fully generally gently
gladly gracefully gradually greatly happily hardly hastily heavily here
honestly hourly immediately indeed indoors instantly instead justly kindly
largely lately lazily less lightly likewise loudly luckily mainly maybe
meanwhile merely merrily mildly monthly mostly naturally nearby nearly neatly
never nevertheless nightly nowadays nowhere obviously occasionally often once
openly outdoors outside overseas partly patiently perfectly perhaps politely
poorly possibly probably promptly properly proudly quickly quietly quite
randomly rapidly rarely rather readily really recently regularly reluctantly
repeatedly roughly rudely sadly safely scarcely secretly seldom seriously
sharply shortly shyly silently simply sincerely sleepily slowly smoothly
softly somehow sometimes somewhere soon specially steadily strictly strongly
suddenly surely sweetly swiftly there therefore thoroughly thus tightly
today together tomorrow tonight totally truly truthfully twice upstairs
usually utterly warmly weekly wholly widely wildly wisely yearly yesterday
""".split()

# ---------------------------------------------------------------------------
# Antonym table (directional; first listed antonym is the default replacement).
# "many" is deliberately absent so bare-quantifier questions fall through to
# same-class sampling.
# ---------------------------------------------------------------------------
ANTONYM_ROWS = [
    ("true", "ADJ", ["false", "untrue"]),
    ("false", "ADJ", ["true", "genuine"]),
    ("legal", "ADJ", ["illegal", "unlawful"]),
    ("new", "ADJ", ["old", "ancient"]),
    ("old", "ADJ", ["new", "young"]),
    ("young", "ADJ", ["old", "elderly"]),
    ("big", "ADJ", ["small", "little"]),
    ("small", "ADJ", ["big", "large"]),
    ("large", "ADJ", ["small", "tiny"]),
    ("tall", "ADJ", ["short", "small"]),
    ("short", "ADJ", ["long", "tall"]),
    ("long", "ADJ", ["short", "brief"]),
    ("hot", "ADJ", ["cold", "cool"]),
    ("cold", "ADJ", ["hot", "warm"]),
    ("warm", "ADJ", ["cool", "cold"]),
    ("cool", "ADJ", ["warm", "hot"]),
    ("fast", "ADJ", ["slow", "sluggish"]),
    ("slow", "ADJ", ["fast", "quick"]),
    ("quick", "ADJ", ["slow", "gradual"]),
    ("early", "ADJ", ["late", "overdue"]),
    ("late", "ADJ", ["early", "prompt"]),
    ("easy", "ADJ", ["hard", "difficult"]),
    ("hard", "ADJ", ["easy", "soft"]),
    ("heavy", "ADJ", ["light", "slight"]),
    ("light", "ADJ", ["heavy", "dark"]),
    ("dark", "ADJ", ["light", "bright"]),
    ("bright", "ADJ", ["dark", "dull"]),
    ("clean", "ADJ", ["dirty", "muddy"]),
    ("dirty", "ADJ", ["clean", "pure"]),
    ("dry", "ADJ", ["wet", "damp"]),
    ("wet", "ADJ", ["dry", "arid"]),
    ("full", "ADJ", ["empty", "vacant"]),
    ("empty", "ADJ", ["full", "packed"]),
    ("open", "ADJ", ["closed", "shut"]),
    ("closed", "ADJ", ["open", "ajar"]),
    ("high", "ADJ", ["low", "shallow"]),
    ("low", "ADJ", ["high", "tall"]),
    ("deep", "ADJ", ["shallow", "low"]),
    ("shallow", "ADJ", ["deep", "profound"]),
    ("wide", "ADJ", ["narrow", "slim"]),
    ("narrow", "ADJ", ["wide", "broad"]),
    ("thick", "ADJ", ["thin", "slim"]),
    ("thin", "ADJ", ["thick", "fat"]),
    ("strong", "ADJ", ["weak", "feeble"]),
    ("weak", "ADJ", ["strong", "mighty"]),
    ("rich", "ADJ", ["poor", "needy"]),
    ("poor", "ADJ", ["rich", "wealthy"]),
    ("happy", "ADJ", ["sad", "gloomy"]),
    ("sad", "ADJ", ["happy", "cheerful"]),
    ("loud", "ADJ", ["quiet", "silent"]),
    ("quiet", "ADJ", ["loud", "noisy"]),
    ("noisy", "ADJ", ["quiet", "silent"]),
    ("safe", "ADJ", ["dangerous", "risky"]),
    ("dangerous", "ADJ", ["safe", "harmless"]),
    ("near", "ADJ", ["distant", "far"]),
    ("distant", "ADJ", ["near", "close"]),
    ("fresh", "ADJ", ["stale", "rotten"]),
    ("sharp", "ADJ", ["blunt", "dull"]),
    ("smooth", "ADJ", ["rough", "coarse"]),
    ("rough", "ADJ", ["smooth", "gentle"]),
    ("soft", "ADJ", ["hard", "stiff"]),
    ("sweet", "ADJ", ["sour", "bitter"]),
    ("sour", "ADJ", ["sweet", "mellow"]),
    ("wild", "ADJ", ["tame", "gentle"]),
    ("tame", "ADJ", ["wild", "fierce"]),
    ("brave", "ADJ", ["scared", "timid"]),
    ("clever", "ADJ", ["foolish", "silly"]),
    ("foolish", "ADJ", ["clever", "wise"]),
    ("wise", "ADJ", ["foolish", "silly"]),
    ("honest", "ADJ", ["dishonest", "deceitful"]),
    ("fair", "ADJ", ["unfair", "unjust"]),
    ("possible", "ADJ", ["impossible", "hopeless"]),
    ("common", "ADJ", ["rare", "scarce"]),
    ("rare", "ADJ", ["common", "frequent"]),
    ("modern", "ADJ", ["ancient", "old"]),
    ("ancient", "ADJ", ["modern", "recent"]),
    ("public", "ADJ", ["private", "secret"]),
    ("private", "ADJ", ["public", "open"]),
    ("alive", "ADJ", ["dead", "lifeless"]),
    ("dead", "ADJ", ["alive", "living"]),
    ("awake", "ADJ", ["asleep", "drowsy"]),
    ("busy", "ADJ", ["idle", "free"]),
    ("careful", "ADJ", ["careless", "reckless"]),
    ("careless", "ADJ", ["careful", "cautious"]),
    ("cheap", "ADJ", ["costly", "dear"]),
    ("useful", "ADJ", ["useless", "worthless"]),
    ("useless", "ADJ", ["useful", "valuable"]),
    ("first", "ADJ", ["last", "final"]),
    ("last", "ADJ", ["first", "initial"]),
    ("main", "ADJ", ["minor", "secondary"]),
    ("major", "ADJ", ["minor", "lesser"]),
    ("minor", "ADJ", ["major", "chief"]),
    ("begin", "VERB", ["end", "finish"]),
    ("end", "VERB", ["begin", "start"]),
    ("start", "VERB", ["stop", "finish"]),
    ("stop", "VERB", ["start", "continue"]),
    ("open", "VERB", ["close", "shut"]),
    ("close", "VERB", ["open", "unlock"]),
    ("rise", "VERB", ["fall", "sink"]),
    ("fall", "VERB", ["rise", "climb"]),
    ("increase", "VERB", ["decrease", "reduce"]),
    ("decrease", "VERB", ["increase", "expand"]),
    ("expand", "VERB", ["shrink", "contract"]),
    ("shrink", "VERB", ["expand", "grow"]),
    ("grow", "VERB", ["shrink", "wither"]),
    ("win", "VERB", ["lose", "fail"]),
    ("lose", "VERB", ["win", "find"]),
    ("find", "VERB", ["lose", "misplace"]),
    ("give", "VERB", ["take", "receive"]),
    ("take", "VERB", ["give", "return"]),
    ("buy", "VERB", ["sell", "trade"]),
    ("sell", "VERB", ["buy", "keep"]),
    ("love", "VERB", ["hate", "despise"]),
    ("hate", "VERB", ["love", "adore"]),
    ("remember", "VERB", ["forget", "ignore"]),
    ("forget", "VERB", ["remember", "recall"]),
    ("accept", "VERB", ["refuse", "reject"]),
    ("refuse", "VERB", ["accept", "allow"]),
    ("allow", "VERB", ["forbid", "prevent"]),
    ("forbid", "VERB", ["allow", "permit"]),
    ("arrive", "VERB", ["depart", "leave"]),
    ("depart", "VERB", ["arrive", "stay"]),
    ("enter", "VERB", ["leave", "exit"]),
    ("leave", "VERB", ["enter", "arrive"]),
    ("appear", "VERB", ["vanish", "disappear"]),
    ("vanish", "VERB", ["appear", "emerge"]),
    ("attack", "VERB", ["defend", "protect"]),
    ("defend", "VERB", ["attack", "assault"]),
    ("build", "VERB", ["destroy", "demolish"]),
    ("destroy", "VERB", ["build", "create"]),
    ("create", "VERB", ["destroy", "ruin"]),
    ("break", "VERB", ["mend", "repair"]),
    ("repair", "VERB", ["break", "damage"]),
    ("push", "VERB", ["pull", "drag"]),
    ("pull", "VERB", ["push", "shove"]),
    ("lend", "VERB", ["borrow", "owe"]),
    ("borrow", "VERB", ["lend", "loan"]),
    ("laugh", "VERB", ["cry", "weep"]),
    ("cry", "VERB", ["laugh", "smile"]),
    ("sink", "VERB", ["float", "rise"]),
    ("float", "VERB", ["sink", "drop"]),
    ("freeze", "VERB", ["melt", "thaw"]),
    ("melt", "VERB", ["freeze", "harden"]),
    ("gather", "VERB", ["scatter", "spread"]),
    ("scatter", "VERB", ["gather", "collect"]),
    ("raise", "VERB", ["lower", "drop"]),
    ("lower", "VERB", ["raise", "lift"]),
    ("always", "ADV", ["never", "rarely"]),
    ("never", "ADV", ["always", "often"]),
    ("often", "ADV", ["seldom", "rarely"]),
    ("seldom", "ADV", ["often", "frequently"]),
    ("rarely", "ADV", ["often", "frequently"]),
    ("quickly", "ADV", ["slowly", "gradually"]),
    ("slowly", "ADV", ["quickly", "rapidly"]),
    ("loudly", "ADV", ["quietly", "softly"]),
    ("quietly", "ADV", ["loudly", "noisily"]),
    ("early", "ADV", ["late", "belatedly"]),
    ("carefully", "ADV", ["carelessly", "hastily"]),
    ("carelessly", "ADV", ["carefully", "cautiously"]),
    ("everywhere", "ADV", ["nowhere", "somewhere"]),
    ("nowhere", "ADV", ["everywhere", "anywhere"]),
    ("indoors", "ADV", ["outdoors", "outside"]),
    ("outdoors", "ADV", ["indoors", "inside"]),
    ("upstairs", "ADV", ["downstairs", "below"]),
    ("downstairs", "ADV", ["upstairs", "above"]),
    ("forward", "ADV", ["backward", "behind"]),
    ("suddenly", "ADV", ["gradually", "slowly"]),
    ("gradually", "ADV", ["suddenly", "abruptly"]),
]

# Function words and auxiliaries tagged OTHER so attacks never touch them.
FUNCTION_WORDS = """
a an the this that these those which what who whom whose when where why how
i you he she it we they me him her us them my your his its our their mine yours
hers ours theirs myself yourself himself herself itself ourselves themselves
and or but nor so yet for because although though while if unless until since
as than whether once
in on at by with from into onto of off about above below under over between
among through during before after behind beside beyond inside outside near
against along across around toward towards within without despite except per
up down out
is are was were be been being am do does did done doing have has had having
can could will would shall should may might must ought need dare
not no yes all any both each every either neither some many much few little
more most less least several enough own same such only just even also too
very quite rather
there here then now
according regarding concerning including
mr mrs ms dr prof etc
""".split()

EXTRA_LEXICON = [
    ("many", "ADJ"),
    ("much", "ADJ"),
    ("few", "ADJ"),
    ("true", "ADJ"),
    ("untrue", "ADJ"),
    ("big", "ADJ"),
    ("first", "ADJ"),
    ("gradual", "ADJ"),
    ("hopeless", "ADJ"),
    ("reckless", "ADJ"),
    ("cautious", "ADJ"),
    ("begin", "VERB"),
    ("break", "VERB"),
    ("decrease", "VERB"),
    ("ignore", "VERB"),
    ("everywhere", "ADV"),
    ("anywhere", "ADV"),
    ("somewhere", "ADV"),
    ("backward", "ADV"),
    ("inside", "ADV"),
    ("outside", "ADV"),
    ("above", "ADV"),
    ("below", "ADV"),
    ("behind", "ADV"),
    ("noisily", "ADV"),
    ("belatedly", "ADV"),
    ("abruptly", "ADV"),
    ("cautiously", "ADV"),
    ("hastily", "ADV"),
    ("frequently", "ADV"),
    ("asleep", "ADJ"),
    ("dishonest", "ADJ"),
    ("deceitful", "ADJ"),
    ("unlawful", "ADJ"),
    ("illegal", "ADJ"),
    ("unjust", "ADJ"),
    ("timid", "ADJ"),
    ("sluggish", "ADJ"),
    ("lifeless", "ADJ"),
    ("worthless", "ADJ"),
    ("valuable", "ADJ"),
    ("difficult", "ADJ"),
    ("initial", "ADJ"),
    ("final", "ADJ"),
    ("secondary", "ADJ"),
    ("lesser", "ADJ"),
    ("chief", "ADJ"),
    ("profound", "ADJ"),
    ("arid", "ADJ"),
    ("ajar", "ADJ"),
    ("packed", "ADJ"),
    ("stale", "ADJ"),
    ("rotten", "ADJ"),
    ("blunt", "ADJ"),
    ("harmless", "ADJ"),
    ("risky", "ADJ"),
    ("needy", "ADJ"),
    ("genuine", "ADJ"),
    ("recent", "ADJ"),
    ("living", "ADJ"),
    ("misplace", "VERB"),
    ("adore", "VERB"),
    ("despise", "VERB"),
    ("recall", "VERB"),
    ("reject", "VERB"),
    ("permit", "VERB"),
    ("exit", "VERB"),
    ("emerge", "VERB"),
    ("assault", "VERB"),
    ("demolish", "VERB"),
    ("ruin", "VERB"),
    ("damage", "VERB"),
    ("shove", "VERB"),
    ("loan", "VERB"),
    ("thaw", "VERB"),
    ("harden", "VERB"),
    ("contract", "VERB"),
    ("wither", "VERB"),
]

COMPOUND_FIRSTS = """
rain sun moon sea wind snow fire day night river road farm house school book
water light stone iron gold silver paper glass wood field hill lake star cloud
storm sand grass tree bird fish horse milk bread salt honey
""".split()

COMPOUND_SECONDS = """
light storm side shore field house yard room gate bridge path road stone wall
mill works keeper maker craft land line mark post ship boat bed bank fall rise
watch guard song tale book word smith ward wick ton berry
""".split()


def pluralize(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 2 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def verb_forms(verb: str) -> list[str]:
    forms = [pluralize(verb)]
    if verb.endswith("e") and not verb.endswith(("ee", "ye", "oe")):
        forms += [verb + "d", verb[:-1] + "ing"]
    elif verb.endswith("y") and len(verb) > 2 and verb[-2] not in "aeiou":
        forms += [verb[:-1] + "ied", verb + "ing"]
    else:
        forms += [verb + "ed", verb + "ing"]
    return forms


def stable_hash(word: str) -> int:
    h = 0xCBF29CE484222325
    for b in word.encode("utf-8"):
        h = ((h ^ b) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def unit(vec: np.ndarray) -> np.ndarray:
    return vec / np.linalg.norm(vec)


def word_vector(word: str) -> np.ndarray:
    rng = np.random.default_rng(MASTER_SEED ^ stable_hash(word))
    return unit(rng.standard_normal(DIM))


def neighbor_vector(base: np.ndarray, neighbor_word: str, eps: float) -> np.ndarray:
    rng = np.random.default_rng((MASTER_SEED * 31) ^ stable_hash(neighbor_word))
    return unit(base + eps * unit(rng.standard_normal(DIM)))


def build_vocab() -> dict[str, str]:
    vocab: dict[str, str] = {}

    def add(word: str, tag: str) -> None:
        vocab.setdefault(word, tag)

    for word, tag, neighbors in PLANTED:
        add(word, tag)
        for n in neighbors:
            add(n, tag)
    for word, neighbors in PROPER_PLANTED:
        add(word, "PROPN")
        for n in neighbors:
            add(n, "PROPN")
    for noun in NOUNS:
        add(noun, "NOUN")
        add(pluralize(noun), "NOUN")
    for verb in VERBS:
        add(verb, "VERB")
        for form in verb_forms(verb):
            add(form, "VERB")
    for adj in ADJECTIVES:
        add(adj, "ADJ")
    for adv in ADVERBS:
        add(adv, "ADV")
    for name in PROPER_EXTRA:
        add(name, "PROPN")
    for n in list(range(0, 101)) + list(range(1900, 2031)):
        add(str(n), "NUM")

    if len(vocab) > VOCAB_SIZE:
        raise SystemExit(f"vocabulary overshoots before filler: {len(vocab)}")
    for second in COMPOUND_SECONDS:
        for first in COMPOUND_FIRSTS:
            if len(vocab) >= VOCAB_SIZE:
                break
            add(first + second, "NOUN")
    if len(vocab) != VOCAB_SIZE:
        raise SystemExit(f"vocabulary has {len(vocab)} words, expected {VOCAB_SIZE}")
    return vocab


def build_vectors(vocab: dict[str, str]) -> dict[str, np.ndarray]:
    vectors = {word: word_vector(word) for word in vocab}

    numbers = sorted((w for w, t in vocab.items() if t == "NUM"), key=lambda w: int(w))
    axis_u = word_vector("#number-axis-u")
    axis_w = unit(word_vector("#number-axis-w")
                  - axis_u * float(word_vector("#number-axis-w") @ axis_u))
    for i, w in enumerate(numbers):
        phi = (i / max(len(numbers) - 1, 1)) * (np.pi / 2)
        vectors[w] = unit(np.cos(phi) * axis_u + np.sin(phi) * axis_w)

    planted_pairs = [(w, ns) for w, _, ns in PLANTED] + list(PROPER_PLANTED)
    for word, neighbors in planted_pairs:
        base = vectors[word]
        for rank, n in enumerate(neighbors):
            vectors[n] = neighbor_vector(base, n, eps=0.05 if rank == 0 else 0.12)
    return vectors


def main() -> None:
    vocab = build_vocab()
    vectors = build_vectors(vocab)
    OUT_DIR.mkdir(parents=True, exist_ok=True)

    with open(OUT_DIR / "embeddings.txt", "w", encoding="utf-8", newline="\n") as fh:
        for word in vocab:
            coords = " ".join(f"{x:.4f}" for x in vectors[word])
            fh.write(f"{word} {coords}\n")

    lexicon: dict[str, str] = {}
    for word, tag in EXTRA_LEXICON:
        lexicon.setdefault(word, tag)
    for word in FUNCTION_WORDS:
        lexicon.setdefault(word, "OTHER")
    for word, tag in vocab.items():
        lexicon.setdefault(word, tag)
    for _, _, antonyms in ANTONYM_ROWS:
        for a in antonyms:
            if a not in lexicon:
                raise SystemExit(f"antonym {a!r} missing from lexicon")
    with open(OUT_DIR / "pos_lexicon.tsv", "w", encoding="utf-8", newline="\n") as fh:
        for word in sorted(lexicon):
            fh.write(f"{word}\t{lexicon[word]}\n")

    seen = set()
    with open(OUT_DIR / "antonyms.tsv", "w", encoding="utf-8", newline="\n") as fh:
        for lemma, pos, antonyms in ANTONYM_ROWS:
            if lemma in antonyms:
                raise SystemExit(f"antonym table maps {lemma!r} to itself")
            if (lemma, pos) in seen:
                raise SystemExit(f"duplicate antonym row for {(lemma, pos)}")
            seen.add((lemma, pos))
            fh.write(f"{lemma}\t{pos}\t{','.join(antonyms)}\n")

    print(f"wrote {len(vocab)} embeddings, {len(lexicon)} lexicon entries, "
          f"{len(ANTONYM_ROWS)} antonym rows to {OUT_DIR}")


if __name__ == "__main__":
    sys.exit(main())
