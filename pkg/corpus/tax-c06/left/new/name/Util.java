package new.name;

public class Util {
    public static void help() {
    }
}
