package med;

public interface Player {
    String title();
}
