package old.name;

public class Util {
    public static void help() {
    }
}
