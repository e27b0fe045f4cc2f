package lgc;

public class App {
    public void boot() {
        Modern.init();
    }

    public void reboot() {
        Modern.init();
    }
}
